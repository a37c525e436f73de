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

#ifndef RSMA_ANALYTIC_CONTEXT_HPP
#define RSMA_ANALYTIC_CONTEXT_HPP

#include "rsma/config.hpp"
#include "rsma/numerics.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace rsma
{

// Tables and series shared by every closed-form expression. Immutable after construction.
//
// Unordered gain CDF: F(x) ~= sum_l Psi_l (1 - exp(-mu_l x)) with
//   mu_l  = 1 + (R/2 + R/2 psi_l)^alpha,
//   Psi_l = (pi/L) sqrt(1 - psi_l^2) (1 + psi_l) / 2.
class AnalyticContext
{
  public:
    explicit AnalyticContext(const SystemConfig &cfg);

    const SystemConfig &config() const { return cfg_; }
    unsigned K() const { return cfg_.K; }
    double R() const { return cfg_.radius_m; }
    double alpha() const { return cfg_.alpha; }
    double R_alpha() const { return r_alpha_; }

    const QuadratureTable &psi_table() const { return psi_; }
    const QuadratureTable &phi_m_table() const { return phi_m_; }
    const QuadratureTable &theta_q_table() const { return theta_q_; }
    const QuadratureTable &phi_n_table() const { return phi_n_; }
    const QuadratureTable &xi_b_table() const { return xi_b_; }
    const QuadratureTable &outer_table() const { return outer_; }

    // l = 1..L stored at index l-1
    const std::vector<double> &mu() const { return mu_; }
    const std::vector<double> &Psi() const { return Psi_; }

    // sum_l Psi_l mu_l
    double S_L() const { return s_l_; }

    // sum_l Psi_l, the limit of F at infinity
    double Psi_sum() const { return psi_sum_; }

    // F as a series with the constant term Psi_0 = -sum Psi_l, mu_0 = 0
    const ExponentialSeries &cdf_series() const { return cdf_series_; }
    const ExponentialSeries &pdf_series() const { return pdf_series_; }

    // cdf_series()^M for M = 0..K
    const ExponentialSeries &cdf_power(unsigned M) const;

    // Unclamped F(x), evaluated as sum Psi_l * (-expm1(-mu_l x)); 0 for x <= 0.
    double cdf(double x) const;
    double pdf(double x) const;

    // sum_l Psi_l (1 - exp(-mu_l x))^p
    double cdf_moment(double x, unsigned p) const;

  private:
    SystemConfig cfg_;
    double r_alpha_;
    QuadratureTable psi_, phi_m_, theta_q_, phi_n_, xi_b_, outer_;
    std::vector<double> mu_, Psi_;
    double s_l_ = 0.0;
    double psi_sum_ = 0.0;
    ExponentialSeries cdf_series_, pdf_series_;
    struct PowerCache
    {
        std::once_flag once;
        std::vector<ExponentialSeries> series;
    };
    std::shared_ptr<PowerCache> powers_;
};

} // namespace rsma

#endif
