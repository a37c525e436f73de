// SPDX-License-Identifier: Apache-2.0
//
// rsma-uplink: outage and fairness evaluation for two-user uplink RSMA
// Copyright (C) 2026 rsma-uplink contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RSMA_NUMERICS_HPP
#define RSMA_NUMERICS_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace rsma
{

// Gauss-Chebyshev (first kind) nodes psi_l = cos((2l-1)pi/(2n)) with the
// Chebyshev weight removed: integral_{-1}^{1} f(t) dt ~= sum_l weights[l] * f(nodes[l]),
// weights[l] = (pi/n) * sqrt(1 - nodes[l]^2).
struct QuadratureTable
{
    std::size_t order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

QuadratureTable chebyshev_nodes(std::size_t order);

// Gauss-Chebyshev approximation of integral_a^b f(x) dx. Throws std::logic_error for a > b.
template <typename Fn>
double gc_integrate(Fn &&f, double a, double b, const QuadratureTable &table)
{
    if (a > b)
        throw std::logic_error("gc_integrate: reversed interval");
    if (a == b)
        return 0.0;
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    double acc = 0.0;
    for (std::size_t l = 0; l < table.order; ++l)
        acc += table.weights[l] * f(mid + half * table.nodes[l]);
    return half * acc;
}

template <typename Fn>
double gc_integrate(Fn &&f, double a, double b, std::size_t order)
{
    return gc_integrate(f, a, b, chebyshev_nodes(order));
}

// Sum of exponentials in the sign convention x -> -sum_l coefficients[l] * exp(-exponents[l] * x).
// Exponents may be negative after affine substitutions (growing terms).
class ExponentialSeries
{
  public:
    ExponentialSeries() = default;
    ExponentialSeries(std::vector<double> coefficients, std::vector<double> exponents);

    // Constant series with value c.
    static ExponentialSeries constant(double c);

    const std::vector<double> &coefficients() const { return coef_; }
    const std::vector<double> &exponents() const { return expo_; }
    std::size_t size() const { return coef_.size(); }

    double evaluate(double x) const;

    // -sum c_l * integral_a^b exp(-e_l x) dx
    double integrate(double a, double b) const;

    // d/dx of the evaluation, as a series
    ExponentialSeries derivative() const;

    // x -> scale * x + shift
    ExponentialSeries affine(double scale, double shift) const;

    ExponentialSeries scaled(double factor) const;

    // Combine terms whose exponents agree to 1e-12 (relative); drops exact zeros.
    ExponentialSeries merged() const;

    friend ExponentialSeries operator*(const ExponentialSeries &a, const ExponentialSeries &b);
    friend ExponentialSeries operator+(const ExponentialSeries &a, const ExponentialSeries &b);
    friend ExponentialSeries operator-(const ExponentialSeries &a, const ExponentialSeries &b);

  private:
    std::vector<double> coef_;
    std::vector<double> expo_;
};

// (series)^M through the multinomial theorem over tuples (p_0..p_L) with sum M.
ExponentialSeries multinomial_power(const ExponentialSeries &series, unsigned M);

// integral_a^b exp(delta * x) dx; b - a when |delta| <= 1e-12 * max(1, |a|, |b|).
double nu(double delta, double a, double b);

} // namespace rsma

#endif
