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

#include "rsma/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace rsma
{

QuadratureTable chebyshev_nodes(std::size_t order)
{
    if (order == 0)
        throw std::invalid_argument("chebyshev_nodes: order must be at least 1");
    QuadratureTable t;
    t.order = order;
    t.nodes.resize(order);
    t.weights.resize(order);
    const double n = static_cast<double>(order);
    for (std::size_t l = 0; l < order; ++l)
    {
        const double angle = (2.0 * double(l + 1) - 1.0) * std::numbers::pi / (2.0 * n);
        t.nodes[l] = std::cos(angle);
        // sqrt(1 - cos^2) without cancellation near the ends
        t.weights[l] = std::numbers::pi / n * std::sin(angle);
    }
    if (order % 2 == 1)
        t.nodes[order / 2] = 0.0;
    return t;
}

ExponentialSeries::ExponentialSeries(std::vector<double> coefficients, std::vector<double> exponents)
    : coef_(std::move(coefficients)), expo_(std::move(exponents))
{
    if (coef_.size() != expo_.size())
        throw std::invalid_argument("ExponentialSeries: coefficient/exponent length mismatch");
}

ExponentialSeries ExponentialSeries::constant(double c)
{
    return ExponentialSeries({-c}, {0.0});
}

double ExponentialSeries::evaluate(double x) const
{
    double acc = 0.0;
    for (std::size_t l = 0; l < coef_.size(); ++l)
        acc -= coef_[l] * std::exp(-expo_[l] * x);
    return acc;
}

double ExponentialSeries::integrate(double a, double b) const
{
    double acc = 0.0;
    for (std::size_t l = 0; l < coef_.size(); ++l)
        if (coef_[l] != 0.0)
            acc -= coef_[l] * nu(-expo_[l], a, b);
    return acc;
}

ExponentialSeries ExponentialSeries::derivative() const
{
    std::vector<double> c(coef_.size());
    for (std::size_t l = 0; l < coef_.size(); ++l)
        c[l] = -coef_[l] * expo_[l];
    return ExponentialSeries(std::move(c), expo_).merged();
}

ExponentialSeries ExponentialSeries::affine(double scale, double shift) const
{
    std::vector<double> c(coef_.size()), e(expo_.size());
    for (std::size_t l = 0; l < coef_.size(); ++l)
    {
        c[l] = coef_[l] * std::exp(-expo_[l] * shift);
        e[l] = expo_[l] * scale;
    }
    return ExponentialSeries(std::move(c), std::move(e));
}

ExponentialSeries ExponentialSeries::scaled(double factor) const
{
    std::vector<double> c(coef_);
    for (auto &v : c)
        v *= factor;
    return ExponentialSeries(std::move(c), expo_);
}

ExponentialSeries ExponentialSeries::merged() const
{
    std::vector<std::size_t> idx(coef_.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t p, std::size_t q) { return expo_[p] < expo_[q]; });
    std::vector<double> c, e;
    c.reserve(idx.size());
    e.reserve(idx.size());
    for (std::size_t k : idx)
    {
        if (!e.empty() && std::abs(expo_[k] - e.back()) <= 1e-12 * std::max(1.0, std::abs(e.back())))
            c.back() += coef_[k];
        else
        {
            c.push_back(coef_[k]);
            e.push_back(expo_[k]);
        }
    }
    std::vector<double> cc, ee;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0.0)
        {
            cc.push_back(c[k]);
            ee.push_back(e[k]);
        }
    return ExponentialSeries(std::move(cc), std::move(ee));
}

ExponentialSeries operator*(const ExponentialSeries &a, const ExponentialSeries &b)
{
    // (-sum a)(-sum b) = -sum(-a b)
    std::vector<double> c, e;
    c.reserve(a.size() * b.size());
    e.reserve(a.size() * b.size());
    for (std::size_t p = 0; p < a.size(); ++p)
        for (std::size_t q = 0; q < b.size(); ++q)
        {
            c.push_back(-a.coef_[p] * b.coef_[q]);
            e.push_back(a.expo_[p] + b.expo_[q]);
        }
    return ExponentialSeries(std::move(c), std::move(e)).merged();
}

ExponentialSeries operator+(const ExponentialSeries &a, const ExponentialSeries &b)
{
    std::vector<double> c(a.coef_), e(a.expo_);
    c.insert(c.end(), b.coef_.begin(), b.coef_.end());
    e.insert(e.end(), b.expo_.begin(), b.expo_.end());
    return ExponentialSeries(std::move(c), std::move(e)).merged();
}

ExponentialSeries operator-(const ExponentialSeries &a, const ExponentialSeries &b)
{
    return a + b.scaled(-1.0);
}

namespace
{
struct TupleWalker
{
    const std::vector<double> &c;
    const std::vector<double> &e;
    std::vector<double> log_factorial;
    std::vector<double> out_c, out_e;

    // Lexicographic walk over (p_0..p_L); prune as soon as the remaining count is exhausted.
    void walk(std::size_t l, unsigned remaining, double log_mult, double product, double exponent)
    {
        if (l + 1 == c.size())
        {
            const double pc = std::pow(c[l], remaining);
            const double mult = std::exp(log_mult - log_factorial[remaining]);
            out_c.push_back(std::round(mult) * product * pc);
            out_e.push_back(exponent + remaining * e[l]);
            return;
        }
        double p_pow = 1.0;
        for (unsigned p = 0; p <= remaining; ++p)
        {
            walk(l + 1, remaining - p, log_mult - log_factorial[p], product * p_pow, exponent + p * e[l]);
            p_pow *= c[l];
        }
    }
};
} // namespace

ExponentialSeries multinomial_power(const ExponentialSeries &series, unsigned M)
{
    if (M == 0)
        return ExponentialSeries::constant(1.0);
    if (series.size() == 0)
        return ExponentialSeries();
    TupleWalker w{series.coefficients(), series.exponents(), {}, {}, {}};
    w.log_factorial.resize(M + 1);
    w.log_factorial[0] = 0.0;
    for (unsigned k = 1; k <= M; ++k)
        w.log_factorial[k] = w.log_factorial[k - 1] + std::log(double(k));
    w.walk(0, M, w.log_factorial[M], 1.0, 0.0);
    // evaluation^M = (-1)^M (sum c e)^M, stored as -sum c'
    const double sign = (M % 2 == 0) ? -1.0 : 1.0;
    for (auto &v : w.out_c)
        v *= sign;
    return ExponentialSeries(std::move(w.out_c), std::move(w.out_e)).merged();
}

double nu(double delta, double a, double b)
{
    const double tol = 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
    if (std::abs(delta) <= tol)
        return b - a;
    return std::exp(delta * a) * std::expm1(delta * (b - a)) / delta;
}

} // namespace rsma
