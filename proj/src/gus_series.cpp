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


// Greedy-scheduling outage expressions as sums of exponentials. Products of the unordered
// gain CDF/PDF series are integrated term by term; with F = -sum_{l=0}^{L} Psi_l e^{-mu_l x}
// this reproduces the closed forms built from the Delta/Xi constants.

#include "rsma/analytic_outage.hpp"

#include <algorithm>

namespace rsma
{

namespace
{

double second_largest_series(const AnalyticContext &ctx, double x)
{
    const unsigned K = ctx.K();
    return double(K) * ctx.cdf_power(K - 1).evaluate(x) - double(K - 1) * ctx.cdf_power(K).evaluate(x);
}

} // namespace

double outage_cpa_gus_series(const AnalyticContext &ctx, double rho, double rate_p, double rate_s)
{
    const Breakpoints bp = cpa_breakpoints(ctx, rho, rate_p, rate_s);
    const unsigned K = ctx.K();
    const ExponentialSeries &F = ctx.cdf_series();
    const ExponentialSeries weight = (ctx.pdf_series() * ctx.cdf_power(K - 2)).merged();
    const ExponentialSeries shifted = F.affine(-1.0, bp.c);

    double p = second_largest_series(ctx, bp.tau_s);
    const double KK = double(K) * double(K - 1);
    if (bp.gamma_s >= 1.0)
        p += KK * ((shifted - F) * weight).integrate(bp.tau_s, bp.m_i1);
    else
    {
        p += KK * ((shifted - F) * weight).integrate(bp.tau_s, bp.m_i2);
        if (bp.eps[5] < bp.m_i1)
        {
            const ExponentialSeries stretched = F.affine(1.0 / bp.gamma_s, -1.0 / rho);
            p += KK * ((shifted - stretched) * weight).integrate(bp.eps[5], bp.m_i1);
        }
    }
    return std::clamp(p, 0.0, 1.0);
}

double outage_fpa_gus_series(const AnalyticContext &ctx, double rho, double rate, PairMember which)
{
    const Breakpoints bp = fpa_breakpoints(ctx, rho, rate);
    const unsigned K = ctx.K();
    const double Kd = K;
    const double tau = bp.tau_s, g = bp.gamma_s;
    const double c1 = tau * (2.0 + g), e8 = bp.eps[8], u = tau * (1.0 + g);
    const ExponentialSeries &F = ctx.cdf_series();
    const ExponentialSeries &f = ctx.pdf_series();

    double p;
    if (which == PairMember::first)
    {
        if (!(g > 0.0))
            return 0.0;
        const ExponentialSeries lower = multinomial_power(F.affine(1.0 / g, -1.0 / rho), K - 1).merged();
        const ExponentialSeries upper_far = multinomial_power(F.affine(-1.0, c1), K - 1).merged();
        p = ctx.cdf_power(K).evaluate(tau) + Kd * ((ctx.cdf_power(K - 1) - lower) * f).integrate(tau, e8) +
            Kd * ((upper_far - lower) * f).integrate(e8, u);
    }
    else
    {
        const ExponentialSeries weight = (f * ctx.cdf_power(K - 2)).merged();
        p = second_largest_series(ctx, tau) +
            Kd * (Kd - 1.0) * ((F.affine(-1.0, c1) - F) * weight).integrate(tau, e8);
    }
    return std::clamp(p, 0.0, 1.0);
}

} // namespace rsma
