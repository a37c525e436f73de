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

#include "rsma/power_alloc.hpp"
#include "rsma/config.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

namespace rsma
{

std::string_view to_string(Strategy s)
{
    switch (s)
    {
    case Strategy::CPA:
        return "CPA";
    case Strategy::FPA:
        return "FPA";
    case Strategy::NOMA:
        return "NOMA";
    case Strategy::OMA:
        return "OMA";
    case Strategy::HYBRID:
        return "HYBRID";
    }
    return "?";
}

namespace
{

double log2_1p(double v) { return std::log1p(v) / std::numbers::ln2; }

void set_sinrs(TransmissionOutcome &o, const SicSinrs &s)
{
    o.sinr_i1 = s.i1;
    o.sinr_j = s.j;
    o.sinr_i2 = s.i2;
}

void flag(TransmissionOutcome &o, const RateTargets &t)
{
    o.outage_first = o.rate_first < t.first;
    o.outage_second = o.rate_second < t.second;
}

} // namespace

SicSinrs sic_sinrs(double eta_i, double eta_j, double beta)
{
    const double residual = (1.0 - beta) * eta_i;
    return {beta * eta_i / (residual + eta_j + 1.0), eta_j / (residual + 1.0), residual};
}

TransmissionOutcome cpa_decide(double eta_p, double eta_s, const RateTargets &targets)
{
    const double gamma_p = target_sinr(targets.first);
    TransmissionOutcome o;
    o.strategy = Strategy::CPA;
    o.splitting_user = SplitRole::second;
    if (eta_p < gamma_p)
    {
        // primary undecodable even alone: secondary decoded first, whole message
        o.beta = 1.0;
        set_sinrs(o, sic_sinrs(eta_s, eta_p, 1.0));
        o.rate_second = log2_1p(o.sinr_i1);
        o.rate_first = log2_1p(eta_p);
        o.outage_first = true;
    }
    else if (eta_p / (eta_s + 1.0) >= gamma_p)
    {
        // primary decodable under full interference
        o.beta = 0.0;
        set_sinrs(o, sic_sinrs(eta_s, eta_p, 0.0));
        o.rate_second = log2_1p(o.sinr_i2);
        o.rate_first = log2_1p(o.sinr_j);
        o.outage_first = false;
    }
    else
    {
        // residual (1-beta) eta_s leaves the primary exactly at its target SINR
        assert(eta_s > 0.0);
        const double residual = (eta_p - gamma_p) / gamma_p;
        o.beta = std::clamp(1.0 - residual / eta_s, 0.0, 1.0);
        o.sinr_i2 = residual;
        o.sinr_j = eta_p / (residual + 1.0);
        o.sinr_i1 = (eta_s - residual) / (residual + eta_p + 1.0);
        o.rate_second = log2_1p(o.sinr_i1) + log2_1p(o.sinr_i2);
        o.rate_first = targets.first;
        o.outage_first = false;
    }
    o.outage_second = o.rate_second < targets.second;
    return o;
}

TransmissionOutcome noma_cpa_baseline(double eta_p, double eta_s, const RateTargets &targets)
{
    const double gamma_p = target_sinr(targets.first);
    TransmissionOutcome o;
    o.strategy = Strategy::NOMA;
    o.splitting_user = SplitRole::second;
    if (eta_p >= gamma_p && eta_p / (eta_s + 1.0) >= gamma_p)
    {
        o.beta = 0.0;
        set_sinrs(o, sic_sinrs(eta_s, eta_p, 0.0));
        o.rate_second = log2_1p(o.sinr_i2);
        o.rate_first = log2_1p(o.sinr_j);
        o.outage_first = false;
    }
    else
    {
        o.beta = 1.0;
        set_sinrs(o, sic_sinrs(eta_s, eta_p, 1.0));
        o.rate_second = log2_1p(o.sinr_i1);
        o.rate_first = log2_1p(o.sinr_j);
        o.outage_first = eta_p < gamma_p;
    }
    o.outage_second = o.rate_second < targets.second;
    return o;
}

TransmissionOutcome fpa_decide(double eta_i, double eta_j, const RateTargets &targets)
{
    const bool first_larger = eta_i >= eta_j;
    const double a = first_larger ? eta_i : eta_j;
    const double b = first_larger ? eta_j : eta_i;
    TransmissionOutcome o;
    o.strategy = Strategy::FPA;
    o.splitting_user = first_larger ? SplitRole::second : SplitRole::first;
    double rate_larger, rate_smaller;
    if (a >= b + b * b)
    {
        // larger user decoded first under full interference
        o.beta = 0.0;
        set_sinrs(o, sic_sinrs(b, a, 0.0));
        rate_larger = log2_1p(o.sinr_j);
        rate_smaller = log2_1p(o.sinr_i2);
    }
    else
    {
        // s = sqrt(1 + a + b) - 1; residual (1 - beta) b = (a - s) / s
        const double s = (a + b) / (std::sqrt(1.0 + a + b) + 1.0);
        const double residual = (a - s) / s;
        assert(residual >= -1e-12 * b && residual <= b * (1.0 + 1e-12));
        o.beta = std::clamp(1.0 - residual / b, 0.0, 1.0);
        o.sinr_i2 = residual;
        o.sinr_j = a / (residual + 1.0);
        o.sinr_i1 = std::max(b - residual, 0.0) / (residual + a + 1.0);
        rate_larger = log2_1p(o.sinr_j);
        rate_smaller = log2_1p(o.sinr_i1) + log2_1p(o.sinr_i2);
    }
    o.rate_first = first_larger ? rate_larger : rate_smaller;
    o.rate_second = first_larger ? rate_smaller : rate_larger;
    flag(o, targets);
    return o;
}

TransmissionOutcome noma_strong_first(double eta_i, double eta_j, const RateTargets &targets)
{
    const bool first_larger = eta_i >= eta_j;
    const double a = first_larger ? eta_i : eta_j;
    const double b = first_larger ? eta_j : eta_i;
    TransmissionOutcome o;
    o.strategy = Strategy::NOMA;
    o.beta = 0.0;
    o.splitting_user = first_larger ? SplitRole::second : SplitRole::first;
    set_sinrs(o, sic_sinrs(b, a, 0.0));
    const double rate_larger = log2_1p(o.sinr_j);
    const double rate_smaller = log2_1p(o.sinr_i2);
    o.rate_first = first_larger ? rate_larger : rate_smaller;
    o.rate_second = first_larger ? rate_smaller : rate_larger;
    flag(o, targets);
    return o;
}

namespace
{
TransmissionOutcome oma_from_shares(double share_i, double share_j, double eta_i, double eta_j,
                                    const RateTargets &targets)
{
    TransmissionOutcome o;
    o.strategy = Strategy::OMA;
    o.beta = 0.0;
    o.splitting_user = SplitRole::none;
    o.share_first = share_i;
    o.share_second = share_j;
    const double capacity = log2_1p(eta_i + eta_j);
    o.rate_first = share_i * capacity;
    o.rate_second = share_j * capacity;
    flag(o, targets);
    return o;
}
} // namespace

TransmissionOutcome oma_baseline(double eta_i, double eta_j, const RateTargets &targets)
{
    const double total = eta_i + eta_j;
    if (!(total > 0.0))
        return oma_from_shares(0.0, 0.0, 0.0, 0.0, targets);
    return oma_from_shares(eta_i / total, eta_j / total, eta_i, eta_j, targets);
}

TransmissionOutcome oma_baseline(double gain_i, double gain_j, double rho, const RateTargets &targets)
{
    const double total = gain_i + gain_j;
    if (!(total > 0.0))
        return oma_from_shares(0.0, 0.0, 0.0, 0.0, targets);
    return oma_from_shares(gain_i / total, gain_j / total, rho * gain_i, rho * gain_j, targets);
}

double jain_index(double rate_a, double rate_b)
{
    const double sq = rate_a * rate_a + rate_b * rate_b;
    if (!(sq > 0.0))
        return 1.0;
    const double sum = rate_a + rate_b;
    // equal rates can round to 1 + ulp
    return std::min(sum * sum / (2.0 * sq), 1.0);
}

double jain_index(const TransmissionOutcome &o)
{
    // OMA rates are shares times a common capacity, which cancels
    if (o.share_first + o.share_second > 0.0)
        return jain_index(o.share_first, o.share_second);
    return jain_index(o.rate_first, o.rate_second);
}

namespace
{
TransmissionOutcome pick_fairer(TransmissionOutcome noma, TransmissionOutcome oma)
{
    TransmissionOutcome &chosen = jain_index(noma) > jain_index(oma) ? noma : oma;
    chosen.strategy = Strategy::HYBRID;
    return chosen;
}
} // namespace

TransmissionOutcome hybrid_baseline(double eta_i, double eta_j, const RateTargets &targets)
{
    return pick_fairer(noma_strong_first(eta_i, eta_j, targets), oma_baseline(eta_i, eta_j, targets));
}

TransmissionOutcome hybrid_baseline(double gain_i, double gain_j, double rho, const RateTargets &targets)
{
    return pick_fairer(noma_strong_first(rho * gain_i, rho * gain_j, targets),
                       oma_baseline(gain_i, gain_j, rho, targets));
}

TransmissionOutcome decide(Strategy s, double eta_first, double eta_second, const RateTargets &targets)
{
    switch (s)
    {
    case Strategy::CPA:
        return cpa_decide(eta_first, eta_second, targets);
    case Strategy::FPA:
        return fpa_decide(eta_first, eta_second, targets);
    case Strategy::NOMA:
        return noma_cpa_baseline(eta_first, eta_second, targets);
    case Strategy::OMA:
        return oma_baseline(eta_first, eta_second, targets);
    case Strategy::HYBRID:
        return hybrid_baseline(eta_first, eta_second, targets);
    }
    return {};
}

} // namespace rsma
