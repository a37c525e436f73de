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


#ifndef RSMA_ANALYTIC_OUTAGE_HPP
#define RSMA_ANALYTIC_OUTAGE_HPP

#include "rsma/analytic_context.hpp"

#include <utility>
#include <vector>

namespace rsma
{

// Outage probabilities of the scheduled pair. Arguments are the linear transmit SNR rho
// and target rates in bit/s/Hz. Every function returns a probability clamped to [0, 1];
// pass `unclamped` to receive the value before clamping.
//
// Notation: gamma = 2^rate - 1, tau = gamma / rho.

// Thresholds of the cognitive and fairness expressions.
struct Breakpoints
{
    double tau_p = 0.0, tau_s = 0.0, gamma_p = 0.0, gamma_s = 0.0;
    // tau_s + tau_p (1 + gamma_s): the sum-rate threshold on the normalized gains
    double c = 0.0;
    // tau_s (1 + gamma_p): above this secondary gain there is no outage
    double upper = 0.0;
    double m_i1 = 0.0, m_i2 = 0.0;
    // eps[k] for k = 1..11; eps[0] unused. Non-finite when the defining equation has no
    // positive root (eps4 for gamma_s (R^a + 1) >= 1, eps5 for gamma_s >= 1, ...).
    double eps[12] = {};
};

Breakpoints cpa_breakpoints(const AnalyticContext &ctx, double rho, double rate_p, double rate_s);
// Fairness thresholds for a common target: tau_p = tau_s = tau, eps7..eps11 filled.
Breakpoints fpa_breakpoints(const AnalyticContext &ctx, double rho, double rate);

// Secondary user of the cognitive strategy with greedy scheduling (primary = larger gain).
double outage_cpa_gus(const AnalyticContext &ctx, double rho, double rate_p, double rate_s,
                      double *unclamped = nullptr);
// High-SNR polynomial in S_L tau with diversity order K - 1.
double outage_cpa_gus_highsnr(const AnalyticContext &ctx, double rho, double rate_p, double rate_s,
                              double *unclamped = nullptr);
// The same probability evaluated from products of exponential series (closed form).
double outage_cpa_gus_series(const AnalyticContext &ctx, double rho, double rate_p, double rate_s);

// One integral piece G[a, b; region] of the CDF-scheduling expressions.
struct Segment
{
    double a = 0.0;
    double b = 0.0;
    int region = 0; // JointCase as int
};

// Row selected from the T1 / T2 dispatch tables, with its integration pieces.
struct TableRow
{
    int row = 0;
    std::vector<Segment> segments;
};

// T1 pieces along x = c - y and T2 pieces along x = y / gamma_s - 1 / rho, y in [tau_s, upper].
TableRow t1_row(const Breakpoints &bp, double r_alpha);
TableRow t2_row(const Breakpoints &bp, double r_alpha);

struct CusCpaTerms
{
    double marginal = 0.0; // F_Y(tau_s)
    double T1 = 0.0;
    double T2 = 0.0;
    TableRow t1, t2;
    double raw() const { return marginal + T1 - T2; }
};

CusCpaTerms cpa_cus_terms(const AnalyticContext &ctx, double rho, double rate_p, double rate_s);

// Secondary user of the cognitive strategy with CDF-based scheduling (primary = largest CDF).
double outage_cpa_cus(const AnalyticContext &ctx, double rho, double rate_p, double rate_s,
                      double *unclamped = nullptr);
// F_Y(tau_s (1 + gamma_p)), an upper bound of outage_cpa_cus, and its high-SNR form
// sum_l Psi_l [K (mu_l u)^(K-1) - (K-1) (mu_l u)^K].
double outage_cpa_cus_upper(const AnalyticContext &ctx, double rho, double rate_p, double rate_s);
double outage_cpa_cus_upper_highsnr(const AnalyticContext &ctx, double rho, double rate_p, double rate_s);

enum class PairMember
{
    first, // larger gain (greedy) or largest CDF value (CDF-based)
    second
};

double outage_fpa_gus(const AnalyticContext &ctx, double rho, double rate, PairMember which,
                      double *unclamped = nullptr);
// High-SNR polynomials with diversity orders K (first) and K - 1 (second).
double outage_fpa_gus_highsnr(const AnalyticContext &ctx, double rho, double rate, PairMember which,
                              double *unclamped = nullptr);
double outage_fpa_gus_series(const AnalyticContext &ctx, double rho, double rate, PairMember which);

struct CusFpaTerms
{
    double marginal = 0.0; // F_X(tau)
    double T3 = 0.0;
    double T4 = 0.0;
    std::vector<Segment> t3, t4;
    double raw() const { return marginal + T3 - T4; }
};

CusFpaTerms fpa_cus_terms(const AnalyticContext &ctx, double rho, double rate);

double outage_fpa_cus(const AnalyticContext &ctx, double rho, double rate, PairMember which,
                      double *unclamped = nullptr);

// Least-squares slope of -log P against log rho. Points are (rho, P) with P > 0.
double diversity_slope(const std::vector<std::pair<double, double>> &points);

} // namespace rsma

#endif
