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

#include "rsma/analytic_context.hpp"

#include <cmath>
#include <stdexcept>

namespace rsma
{

AnalyticContext::AnalyticContext(const SystemConfig &cfg) : cfg_(cfg)
{
    cfg_.validate();
    r_alpha_ = std::pow(cfg_.radius_m, cfg_.alpha);
    psi_ = chebyshev_nodes(cfg_.orders.L);
    phi_m_ = chebyshev_nodes(cfg_.orders.M);
    theta_q_ = chebyshev_nodes(cfg_.orders.Q);
    phi_n_ = chebyshev_nodes(cfg_.orders.N);
    xi_b_ = chebyshev_nodes(cfg_.orders.B);
    outer_ = chebyshev_nodes(cfg_.orders.outer);

    const double half_r = 0.5 * cfg_.radius_m;
    const std::size_t L = psi_.order;
    mu_.resize(L);
    Psi_.resize(L);
    std::vector<double> coef(L + 1), expo(L + 1), pdf_coef(L), pdf_expo(L);
    for (std::size_t l = 0; l < L; ++l)
    {
        const double node = psi_.nodes[l];
        mu_[l] = 1.0 + std::pow(half_r + half_r * node, cfg_.alpha);
        Psi_[l] = 0.5 * psi_.weights[l] * (1.0 + node);
        s_l_ += Psi_[l] * mu_[l];
        psi_sum_ += Psi_[l];
        coef[l + 1] = Psi_[l];
        expo[l + 1] = mu_[l];
        pdf_coef[l] = -Psi_[l] * mu_[l];
        pdf_expo[l] = mu_[l];
    }
    coef[0] = -psi_sum_;
    expo[0] = 0.0;
    cdf_series_ = ExponentialSeries(coef, expo);
    pdf_series_ = ExponentialSeries(pdf_coef, pdf_expo);
    powers_ = std::make_shared<PowerCache>();
}

const ExponentialSeries &AnalyticContext::cdf_power(unsigned M) const
{
    if (M > cfg_.K)
        throw std::out_of_range("AnalyticContext::cdf_power: exponent above K");
    // built on first use: the expansion has C(L + K, K) terms
    std::call_once(powers_->once, [this] {
        powers_->series.reserve(cfg_.K + 1);
        for (unsigned m = 0; m <= cfg_.K; ++m)
            powers_->series.push_back(multinomial_power(cdf_series_, m));
    });
    return powers_->series[M];
}

double AnalyticContext::cdf(double x) const
{
    if (!(x > 0.0))
        return 0.0;
    double acc = 0.0;
    for (std::size_t l = 0; l < mu_.size(); ++l)
        acc -= Psi_[l] * std::expm1(-mu_[l] * x);
    return acc;
}

double AnalyticContext::pdf(double x) const
{
    if (x < 0.0)
        return 0.0;
    double acc = 0.0;
    for (std::size_t l = 0; l < mu_.size(); ++l)
        acc += Psi_[l] * mu_[l] * std::exp(-mu_[l] * x);
    return acc;
}

double AnalyticContext::cdf_moment(double x, unsigned p) const
{
    if (!(x > 0.0))
        return p == 0 ? psi_sum_ : 0.0;
    double acc = 0.0;
    for (std::size_t l = 0; l < mu_.size(); ++l)
        acc += Psi_[l] * std::pow(-std::expm1(-mu_[l] * x), int(p));
    return acc;
}

} // namespace rsma
