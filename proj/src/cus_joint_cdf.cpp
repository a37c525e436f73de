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

#include "rsma/cus_joint_cdf.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace rsma
{

JointCase joint_case(double x, double y, double r_alpha)
{
    const double s = r_alpha + 1.0;
    if (x >= s * y)
        return JointCase::I;
    if (y <= x)
        return JointCase::II;
    if (y < s * x)
        return JointCase::III;
    return JointCase::IV;
}

namespace
{

template <typename T>
T ipow(const T &v, unsigned p)
{
    T r(1.0);
    for (unsigned k = 0; k < p; ++k)
        r *= v;
    return r;
}

// base^(1/alpha), with rounding noise below zero mapped to 0
template <typename T>
T root(const T &base, double inv_alpha)
{
    using std::pow;
    if (value_of(base) <= 0.0)
        return T(0.0);
    return pow(base, inv_alpha);
}

template <typename T>
struct Lemma
{
    const AnalyticContext &ctx;
    const T &x;
    const T &y;
    double R, alpha, inv_alpha, R2;
    unsigned K;

    Lemma(const AnalyticContext &c, const T &xx, const T &yy)
        : ctx(c), x(xx), y(yy), R(c.R()), alpha(c.alpha()), inv_alpha(1.0 / c.alpha()), R2(c.R() * c.R()), K(c.K())
    {
    }

    // 1 - exp(-(1 + z^alpha) v)
    T om(const T &z, const T &v) const
    {
        using std::expm1;
        using std::pow;
        return -expm1(-(1.0 + pow(z, alpha)) * v);
    }

    T I1(const T &z) const
    {
        using std::pow;
        return root(y / x * (1.0 + pow(z, alpha)) - 1.0, inv_alpha);
    }

    T I2(const T &z) const
    {
        using std::pow;
        return root(x / y * (1.0 + pow(z, alpha)) - 1.0, inv_alpha);
    }

    T sum_psi_pow(const T &v, unsigned p) const
    {
        using std::expm1;
        T acc(0.0);
        const auto &mu = ctx.mu();
        const auto &Psi = ctx.Psi();
        for (std::size_t l = 0; l < mu.size(); ++l)
            acc += Psi[l] * ipow(T(-expm1(-mu[l] * v)), p);
        return acc;
    }

    // w_N sum_n Phi_n(z) om(Phi_n(z), x), Phi_n(z) = (R + I1(z))/2 + (R - I1(z))/2 phi_n
    T inner_n(const T &i1) const
    {
        const auto &tab = ctx.phi_n_table();
        T acc(0.0);
        for (std::size_t n = 0; n < tab.order; ++n)
        {
            const T phi = 0.5 * (R + i1) + 0.5 * (R - i1) * tab.nodes[n];
            acc += (tab.weights[n] / R2) * phi * om(phi, x);
        }
        return acc;
    }

    T case_one() const
    {
        return double(K) * sum_psi_pow(y, K - 1) * sum_psi_pow(x, 1) - double(K - 1) * sum_psi_pow(y, K);
    }

    T case_four() const { return sum_psi_pow(x, K); }

    T case_two() const
    {
        const double s = ctx.R_alpha() + 1.0;
        const T a1 = root(x / y - 1.0, inv_alpha);
        const T a2 = root(y / x * s - 1.0, inv_alpha);
        const auto &tm_tab = ctx.phi_m_table();
        const auto &tq_tab = ctx.theta_q_table();
        const auto &xb_tab = ctx.xi_b_table();

        T m_km1(0.0), m_k(0.0);
        for (std::size_t m = 0; m < tm_tab.order; ++m)
        {
            const T t = 0.5 * a1 * (1.0 + tm_tab.nodes[m]);
            const double w = tm_tab.weights[m] / R2;
            const T o = om(t, y);
            const T o_km1 = ipow(o, K - 1);
            m_km1 += w * t * o_km1;
            m_k += w * t * o_km1 * o;
        }

        T q_cross(0.0), q_k(0.0);
        for (std::size_t q = 0; q < tq_tab.order; ++q)
        {
            const T th = 0.5 * (R + a1) - 0.5 * (R - a1) * tq_tab.nodes[q];
            const double w = tq_tab.weights[q] / R2;
            const T o = om(th, y);
            const T o_km1 = ipow(o, K - 1);
            const T i1 = I1(th);
            q_cross += w * th * o_km1 * (R - i1) * inner_n(i1);
            q_k += w * th * o_km1 * o * (1.0 - i1 * i1 / R2);
        }

        T b_k(0.0);
        for (std::size_t b = 0; b < xb_tab.order; ++b)
        {
            const T xi = 0.5 * a2 * (1.0 + xb_tab.nodes[b]);
            const double w = xb_tab.weights[b] / R2;
            const T i2 = I2(xi);
            b_k += w * xi * ipow(om(xi, x), K) * (1.0 - i2 * i2 / R2);
        }

        const double Kd = double(K), Km1 = double(K - 1);
        return Kd * a1 * m_km1 * sum_psi_pow(x, 1) + Kd * (R - a1) * q_cross - Km1 * a1 * m_k -
               Km1 * (R - a1) * q_k + a2 * b_k;
    }

    T case_three() const
    {
        const double s = ctx.R_alpha() + 1.0;
        const T a1 = root(y / x - 1.0, inv_alpha);
        const T a2 = root(x / y * s - 1.0, inv_alpha);
        const auto &tm_tab = ctx.phi_m_table();
        const auto &tq_tab = ctx.theta_q_table();
        const auto &xb_tab = ctx.xi_b_table();

        T b_cross(0.0), b_k(0.0);
        for (std::size_t b = 0; b < xb_tab.order; ++b)
        {
            const T xi = 0.5 * a2 * (1.0 + xb_tab.nodes[b]);
            const double w = xb_tab.weights[b] / R2;
            const T o = om(xi, y);
            const T o_km1 = ipow(o, K - 1);
            const T i1 = I1(xi);
            b_cross += w * xi * o_km1 * (R - i1) * inner_n(i1);
            b_k += w * xi * o_km1 * o * (1.0 - i1 * i1 / R2);
        }

        T m_k(0.0);
        for (std::size_t m = 0; m < tm_tab.order; ++m)
        {
            const T t = 0.5 * a1 * (1.0 + tm_tab.nodes[m]);
            m_k += (tm_tab.weights[m] / R2) * t * ipow(om(t, x), K);
        }

        T q_k(0.0);
        for (std::size_t q = 0; q < tq_tab.order; ++q)
        {
            const T th = 0.5 * (R + a1) - 0.5 * (R - a1) * tq_tab.nodes[q];
            const T i2 = I2(th);
            q_k += (tq_tab.weights[q] / R2) * th * ipow(om(th, x), K) * (1.0 - i2 * i2 / R2);
        }

        const double Kd = double(K), Km1 = double(K - 1);
        return Kd * a2 * b_cross - Km1 * a2 * b_k + a1 * m_k + (R - a1) * q_k;
    }
};

double tangent(const Dual &v) { return v.d; }

} // namespace

template <typename T>
T joint_cdf_case(JointCase region, const T &x, const T &y, const AnalyticContext &ctx)
{
    const Lemma<T> lm(ctx, x, y);
    switch (region)
    {
    case JointCase::I:
        return lm.case_one();
    case JointCase::II:
        return lm.case_two();
    case JointCase::III:
        return lm.case_three();
    case JointCase::IV:
        return lm.case_four();
    }
    return T(0.0);
}

template double joint_cdf_case<double>(JointCase, const double &, const double &, const AnalyticContext &);
template Dual joint_cdf_case<Dual>(JointCase, const Dual &, const Dual &, const AnalyticContext &);

double joint_cdf_raw(double x, double y, const AnalyticContext &ctx)
{
    if (!(x > 0.0) || !(y > 0.0))
        return 0.0;
    return joint_cdf_case(joint_case(x, y, ctx.R_alpha()), x, y, ctx);
}

double joint_cdf(double x, double y, const AnalyticContext &ctx)
{
    return std::clamp(joint_cdf_raw(x, y, ctx), 0.0, 1.0);
}

double joint_cdf_case_dx(JointCase region, double x, double y, const AnalyticContext &ctx)
{
    if (!(x > 0.0) || !(y > 0.0))
        return 0.0;
    return tangent(joint_cdf_case(region, Dual(x, 1.0), Dual(y, 0.0), ctx));
}

double joint_cdf_case_dy(JointCase region, double x, double y, const AnalyticContext &ctx)
{
    if (!(x > 0.0) || !(y > 0.0))
        return 0.0;
    return tangent(joint_cdf_case(region, Dual(x, 0.0), Dual(y, 1.0), ctx));
}

double joint_cdf_dx(double x, double y, const AnalyticContext &ctx)
{
    if (!(x > 0.0) || !(y > 0.0))
        return 0.0;
    return joint_cdf_case_dx(joint_case(x, y, ctx.R_alpha()), x, y, ctx);
}

double joint_cdf_dy(double x, double y, const AnalyticContext &ctx)
{
    if (!(x > 0.0) || !(y > 0.0))
        return 0.0;
    return joint_cdf_case_dy(joint_case(x, y, ctx.R_alpha()), x, y, ctx);
}

double marginal_cdf_first_raw(double x, const AnalyticContext &ctx) { return ctx.cdf_moment(x, ctx.K()); }

double marginal_cdf_first(double x, const AnalyticContext &ctx)
{
    return std::clamp(marginal_cdf_first_raw(x, ctx), 0.0, 1.0);
}

double marginal_cdf_second_raw(double y, const AnalyticContext &ctx)
{
    if (!(y > 0.0))
        return 0.0;
    const unsigned K = ctx.K();
    return double(K) * ctx.cdf_moment(y, K - 1) - double(K - 1) * ctx.cdf_moment(y, K);
}

double marginal_cdf_second(double y, const AnalyticContext &ctx)
{
    return std::clamp(marginal_cdf_second_raw(y, ctx), 0.0, 1.0);
}

} // namespace rsma
