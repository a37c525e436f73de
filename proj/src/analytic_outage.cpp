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


#include "rsma/analytic_outage.hpp"
#include "rsma/cus_joint_cdf.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rsma
{

namespace
{

constexpr double inf = std::numeric_limits<double>::infinity();

double finish(double raw, double *unclamped)
{
    if (unclamped)
        *unclamped = raw;
    if (std::isnan(raw))
        throw std::runtime_error("outage evaluation produced NaN");
    return std::clamp(raw, 0.0, 1.0);
}

// Adaptive Gauss-Kronrod; empty or reversed intervals contribute nothing.
template <typename Fn>
double integral(Fn &&f, double a, double b)
{
    if (!(b > a))
        return 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 12, 1e-11);
}

double ipow(double v, unsigned p)
{
    double r = 1.0;
    for (unsigned k = 0; k < p; ++k)
        r *= v;
    return r;
}

// CDF of the second largest of K unordered gains
double second_largest_cdf(const AnalyticContext &ctx, double x)
{
    const unsigned K = ctx.K();
    const double F = ctx.cdf(x);
    return double(K) * ipow(F, K - 1) - double(K - 1) * ipow(F, K);
}

void check_inputs(double rho, double rate)
{
    if (!(rho > 0.0))
        throw std::invalid_argument("transmit SNR must be positive");
    if (!(rate >= 0.0))
        throw std::invalid_argument("target rate must be non-negative");
}

double gc_piece(const AnalyticContext &ctx, const Segment &s, double (*x_of)(double, const Breakpoints &),
                const Breakpoints &bp, bool along_y)
{
    if (!(s.b > s.a))
        return 0.0;
    const auto region = JointCase(s.region);
    if (along_y)
        return gc_integrate(
            [&](double y) { return joint_cdf_case_dy(region, x_of(y, bp), y, ctx); }, s.a, s.b,
            ctx.outer_table());
    return gc_integrate([&](double x) { return joint_cdf_case_dx(region, x, x_of(x, bp), ctx); }, s.a, s.b,
                        ctx.outer_table());
}

double t1_path(double y, const Breakpoints &bp) { return bp.c - y; }
double t2_path(double y, const Breakpoints &bp) { return y / bp.gamma_s - bp.tau_s / bp.gamma_s; }

} // namespace

Breakpoints cpa_breakpoints(const AnalyticContext &ctx, double rho, double rate_p, double rate_s)
{
    check_inputs(rho, rate_p);
    check_inputs(rho, rate_s);
    Breakpoints bp;
    bp.gamma_p = target_sinr(rate_p);
    bp.gamma_s = target_sinr(rate_s);
    bp.tau_p = bp.gamma_p / rho;
    bp.tau_s = bp.gamma_s / rho;
    bp.c = bp.tau_s + bp.tau_p * (1.0 + bp.gamma_s);
    bp.upper = bp.tau_s * (1.0 + bp.gamma_p);
    bp.m_i1 = std::min(bp.upper, 0.5 * bp.c);
    bp.m_i2 = bp.gamma_s < 1.0 ? std::min(bp.m_i1, bp.tau_s / (1.0 - bp.gamma_s)) : bp.m_i1;

    const double s = ctx.R_alpha() + 1.0;
    const double gs = bp.gamma_s;
    bp.eps[1] = bp.c / (s + 1.0);
    bp.eps[2] = bp.c / 2.0;
    bp.eps[3] = s * bp.c / (s + 1.0);
    bp.eps[4] = gs * s < 1.0 ? bp.tau_s / (1.0 - gs * s) : inf;
    bp.eps[5] = gs < 1.0 ? bp.tau_s / (1.0 - gs) : inf;
    bp.eps[6] = s > gs ? s * bp.tau_s / (s - gs) : inf;
    return bp;
}

Breakpoints fpa_breakpoints(const AnalyticContext &ctx, double rho, double rate)
{
    Breakpoints bp = cpa_breakpoints(ctx, rho, rate, rate);
    const double s = ctx.R_alpha() + 1.0;
    const double tau = bp.tau_s, g = bp.gamma_s;
    const double c = tau * (2.0 + g);
    bp.eps[7] = c / (s + 1.0);
    bp.eps[8] = c / 2.0;
    bp.eps[9] = s * c / (s + 1.0);
    bp.eps[10] = g < 1.0 ? tau / (1.0 - g) : inf;
    bp.eps[11] = s > g ? s * tau / (s - g) : inf;
    return bp;
}

// ---------------------------------------------------------------- greedy, cognitive

double outage_cpa_gus(const AnalyticContext &ctx, double rho, double rate_p, double rate_s, double *unclamped)
{
    const Breakpoints bp = cpa_breakpoints(ctx, rho, rate_p, rate_s);
    const unsigned K = ctx.K();
    const double KK = double(K) * double(K - 1);
    const double inv_rho = 1.0 / rho;

    const auto weight = [&](double y) { return ctx.pdf(y) * ipow(ctx.cdf(y), K - 2); };
    const auto below_diag = [&](double y) { return (ctx.cdf(bp.c - y) - ctx.cdf(y)) * weight(y); };
    const auto beyond_diag = [&](double y) {
        return (ctx.cdf(bp.c - y) - ctx.cdf(y / bp.gamma_s - inv_rho)) * weight(y);
    };

    double raw = second_largest_cdf(ctx, bp.tau_s);
    if (bp.gamma_s >= 1.0)
        raw += KK * integral(below_diag, bp.tau_s, bp.m_i1);
    else
    {
        raw += KK * integral(below_diag, bp.tau_s, bp.m_i2);
        // only non-empty when gamma_p > gamma_s / (1 - gamma_s)
        raw += KK * integral(beyond_diag, bp.eps[5], bp.m_i1);
    }
    return finish(raw, unclamped);
}

double outage_cpa_gus_highsnr(const AnalyticContext &ctx, double rho, double rate_p, double rate_s,
                              double *unclamped)
{
    const Breakpoints bp = cpa_breakpoints(ctx, rho, rate_p, rate_s);
    const unsigned K = ctx.K();
    const double Kd = K, Km1 = K - 1.0;
    const double S = ctx.S_L();
    const double ts = bp.tau_s, gs = bp.gamma_s, gp = bp.gamma_p;
    const double head = Kd * ipow(S * ts, K - 1) - Km1 * ipow(S * ts, K);
    const double scale = Kd * Km1 * ipow(S, K);

    const auto strip = [&](double m) {
        return bp.c * (ipow(m, K - 1) - ipow(ts, K - 1)) / Km1 - 2.0 / Kd * (ipow(m, K) - ipow(ts, K));
    };

    double raw;
    if (gs >= 1.0)
        raw = head + scale * strip(bp.m_i1);
    else if (gp > gs / (1.0 - gs))
    {
        const double u = ts * (1.0 + gp), e5 = ts / (1.0 - gs);
        raw = head + scale * (strip(bp.m_i2) - (1.0 + gs) / (Kd * gs) * (ipow(u, K) - ipow(e5, K)) +
                              (bp.c + 1.0 / rho) / Km1 * (ipow(u, K - 1) - ipow(e5, K - 1)));
    }
    else
        raw = head + scale * strip(bp.m_i2);
    return finish(raw, unclamped);
}

// ---------------------------------------------------------------- CDF-based, cognitive

TableRow t1_row(const Breakpoints &bp, double /*r_alpha*/)
{
    const double s = bp.tau_s, u = bp.upper;
    const double e1 = bp.eps[1], e2 = bp.eps[2], e3 = bp.eps[3];
    using J = JointCase;
    const auto seg = [](double a, double b, J r) { return Segment{a, b, int(r)}; };

    if (e2 >= u)
    {
        if (e1 >= u)
            return {1, {seg(s, u, J::I)}};
        if (e1 > s)
            return {2, {seg(s, e1, J::I), seg(e1, u, J::II)}};
        return {3, {seg(s, u, J::II)}};
    }
    if (e2 > s)
    {
        if (e1 <= s && e3 < u)
            return {4, {seg(s, e2, J::II), seg(e2, e3, J::III)}};
        if (e1 <= s)
            return {5, {seg(s, e2, J::II), seg(e2, u, J::III)}};
        if (e3 < u)
            return {6, {seg(s, e1, J::I), seg(e1, e2, J::II), seg(e2, e3, J::III)}};
        return {7, {seg(s, e1, J::I), seg(e1, e2, J::II), seg(e2, u, J::III)}};
    }
    if (e2 <= s)
    {
        if (e3 <= s)
            return {8, {}};
        if (e3 < u)
            return {9, {seg(s, e3, J::III)}};
        return {10, {seg(s, u, J::III)}};
    }
    throw std::logic_error("T1 dispatch: no row matches the breakpoints");
}

TableRow t2_row(const Breakpoints &bp, double r_alpha)
{
    const double s = r_alpha + 1.0, u = bp.upper, gs = bp.gamma_s;
    const double e4 = bp.eps[4], e5 = bp.eps[5], e6 = bp.eps[6];
    using J = JointCase;
    const auto seg = [](double a, double b, J r) { return Segment{a, b, int(r)}; };

    if (gs >= 1.0)
    {
        if (s <= gs)
            return {1, {}};
        if (e6 >= u)
            return {2, {}};
        return {3, {seg(e6, u, J::III)}};
    }
    if (e5 < u)
    {
        if (e4 < u)
            return {5, {seg(e6, e5, J::III), seg(e5, e4, J::II), seg(e4, u, J::I)}};
        return {4, {seg(e6, e5, J::III), seg(e5, u, J::II)}};
    }
    if (e5 >= u)
    {
        if (e6 >= u)
            return {6, {}};
        return {7, {seg(e6, u, J::III)}};
    }
    throw std::logic_error("T2 dispatch: no row matches the breakpoints");
}

CusCpaTerms cpa_cus_terms(const AnalyticContext &ctx, double rho, double rate_p, double rate_s)
{
    const Breakpoints bp = cpa_breakpoints(ctx, rho, rate_p, rate_s);
    CusCpaTerms t;
    t.marginal = marginal_cdf_second_raw(bp.tau_s, ctx);
    t.t1 = t1_row(bp, ctx.R_alpha());
    t.t2 = t2_row(bp, ctx.R_alpha());
    for (const auto &s : t.t1.segments)
        t.T1 += gc_piece(ctx, s, t1_path, bp, true);
    for (const auto &s : t.t2.segments)
        t.T2 += gc_piece(ctx, s, t2_path, bp, true);
    return t;
}

double outage_cpa_cus(const AnalyticContext &ctx, double rho, double rate_p, double rate_s, double *unclamped)
{
    return finish(cpa_cus_terms(ctx, rho, rate_p, rate_s).raw(), unclamped);
}

double outage_cpa_cus_upper(const AnalyticContext &ctx, double rho, double rate_p, double rate_s)
{
    const Breakpoints bp = cpa_breakpoints(ctx, rho, rate_p, rate_s);
    return marginal_cdf_second(bp.upper, ctx);
}

double outage_cpa_cus_upper_highsnr(const AnalyticContext &ctx, double rho, double rate_p, double rate_s)
{
    const Breakpoints bp = cpa_breakpoints(ctx, rho, rate_p, rate_s);
    const unsigned K = ctx.K();
    double acc = 0.0;
    for (std::size_t l = 0; l < ctx.mu().size(); ++l)
    {
        const double v = ctx.mu()[l] * bp.upper;
        acc += ctx.Psi()[l] * (double(K) * ipow(v, K - 1) - double(K - 1) * ipow(v, K));
    }
    return std::clamp(acc, 0.0, 1.0);
}

// ---------------------------------------------------------------- greedy, fairness

double outage_fpa_gus(const AnalyticContext &ctx, double rho, double rate, PairMember which, double *unclamped)
{
    const Breakpoints bp = fpa_breakpoints(ctx, rho, rate);
    const unsigned K = ctx.K();
    const double Kd = K;
    const double tau = bp.tau_s, g = bp.gamma_s, inv_rho = 1.0 / rho;
    const double c1 = tau * (2.0 + g), e8 = bp.eps[8], u = tau * (1.0 + g);

    double raw;
    if (which == PairMember::first)
    {
        const auto lower = [&](double x) { return ipow(ctx.cdf(x / g - inv_rho), K - 1); };
        const auto near = [&](double x) { return (ipow(ctx.cdf(x), K - 1) - lower(x)) * ctx.pdf(x); };
        const auto far = [&](double x) { return (ipow(ctx.cdf(c1 - x), K - 1) - lower(x)) * ctx.pdf(x); };
        raw = ipow(ctx.cdf(tau), K) + Kd * integral(near, tau, e8) + Kd * integral(far, e8, u);
    }
    else
    {
        const auto strip = [&](double y) {
            return (ctx.cdf(c1 - y) - ctx.cdf(y)) * ctx.pdf(y) * ipow(ctx.cdf(y), K - 2);
        };
        raw = second_largest_cdf(ctx, tau) + Kd * (Kd - 1.0) * integral(strip, tau, e8);
    }
    return finish(raw, unclamped);
}

double outage_fpa_gus_highsnr(const AnalyticContext &ctx, double rho, double rate, PairMember which,
                              double *unclamped)
{
    const Breakpoints bp = fpa_breakpoints(ctx, rho, rate);
    const unsigned K = ctx.K();
    const double Kd = K, Km1 = K - 1.0;
    const double S = ctx.S_L(), tau = bp.tau_s, g = bp.gamma_s;
    const double St = S * tau;

    double raw;
    if (which == PairMember::first)
    {
        double first = 0.0, second = 0.0, binom = 1.0;
        for (unsigned k = 0; k < K; ++k)
        {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            const double sign2 = ((K - 1 - k) % 2 == 0) ? 1.0 : -1.0;
            first += binom * ipow(g + 2.0, K - 1 - k) * sign / (k + 1.0) *
                     (ipow(1.0 + g, k + 1) - ipow(1.0 + 0.5 * g, k + 1));
            second += binom * g / (k + 1.0) * sign2 * (ipow(1.0 + g, k + 1) - 1.0);
            binom = binom * double(K - 1 - k) / double(k + 1);
        }
        raw = Kd * ipow(St, K) * first - Kd * ipow(S / rho, K) * second +
              ipow(St, K) * (ipow(1.0 + 0.5 * g, K) - 1.0) + ipow(St, K);
    }
    else
    {
        raw = Kd * Km1 * ipow(St, K) *
                  ((g + 2.0) / Km1 * (ipow(1.0 + 0.5 * g, K - 1) - 1.0) -
                   2.0 / Kd * (ipow(1.0 + 0.5 * g, K) - 1.0)) +
              Kd * ipow(St, K - 1) - Km1 * ipow(St, K);
    }
    return finish(raw, unclamped);
}

// ---------------------------------------------------------------- CDF-based, fairness

namespace
{
double t3_path(double x, const Breakpoints &bp) { return bp.tau_s * (2.0 + bp.gamma_s) - x; }
double t4_path(double x, const Breakpoints &bp) { return x / bp.gamma_s - bp.tau_s / bp.gamma_s; }
} // namespace

CusFpaTerms fpa_cus_terms(const AnalyticContext &ctx, double rho, double rate)
{
    const Breakpoints bp = fpa_breakpoints(ctx, rho, rate);
    const double tau = bp.tau_s, u = bp.upper;
    using J = JointCase;
    const auto seg = [](double a, double b, J r) { return Segment{a, b, int(r)}; };

    CusFpaTerms t;
    t.marginal = marginal_cdf_first_raw(tau, ctx);
    if (ctx.R_alpha() > bp.gamma_s)
    {
        t.t3 = {seg(tau, bp.eps[8], J::III), seg(bp.eps[8], u, J::II)};
        t.t4 = {seg(tau, bp.eps[11], J::I), seg(bp.eps[11], u, J::II)};
    }
    else
    {
        t.t3 = {seg(tau, bp.eps[7], J::IV), seg(bp.eps[7], bp.eps[8], J::III), seg(bp.eps[8], bp.eps[9], J::II),
                seg(bp.eps[9], u, J::I)};
        t.t4 = {seg(tau, u, J::I)};
    }
    for (const auto &s : t.t3)
        t.T3 += gc_piece(ctx, s, t3_path, bp, false);
    for (const auto &s : t.t4)
        t.T4 += gc_piece(ctx, s, t4_path, bp, false);
    return t;
}

double outage_fpa_cus(const AnalyticContext &ctx, double rho, double rate, PairMember which, double *unclamped)
{
    if (which == PairMember::second)
        return outage_cpa_cus(ctx, rho, rate, rate, unclamped);
    return finish(fpa_cus_terms(ctx, rho, rate).raw(), unclamped);
}

// ---------------------------------------------------------------- slopes

double diversity_slope(const std::vector<std::pair<double, double>> &points)
{
    if (points.size() < 2)
        throw std::invalid_argument("diversity_slope: need at least two points");
    double sx = 0.0, sy = 0.0;
    for (const auto &[rho, p] : points)
    {
        if (!(rho > 0.0) || !(p > 0.0))
            throw std::invalid_argument("diversity_slope: SNR and probability must be positive");
        sx += std::log(rho);
        sy += -std::log(p);
    }
    const double n = double(points.size());
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto &[rho, p] : points)
    {
        const double dx = std::log(rho) - mx;
        sxx += dx * dx;
        sxy += dx * (-std::log(p) - my);
    }
    if (!(sxx > 0.0))
        throw std::invalid_argument("diversity_slope: SNR values must differ");
    return sxy / sxx;
}

} // namespace rsma
