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

#ifndef RSMA_POWER_ALLOC_HPP
#define RSMA_POWER_ALLOC_HPP

#include <string_view>

namespace rsma
{

enum class Strategy
{
    CPA,
    FPA,
    NOMA,
    OMA,
    HYBRID
};

std::string_view to_string(Strategy s);

// Which member of the pair splits its message (plays U_i in the SINR expressions).
enum class SplitRole
{
    first,
    second,
    none
};

// Two-user uplink transmission. "first"/"second" are the caller's argument order:
// (primary, secondary) for the cognitive rules, (U_i, U_j) otherwise.
// SINRs follow the decoding order s_i1 -> s_j -> s_i2 with i the splitting (or
// later-decoded) user.
struct TransmissionOutcome
{
    double beta = 0.0;
    Strategy strategy = Strategy::CPA;
    double rate_first = 0.0;
    double rate_second = 0.0;
    double sinr_i1 = 0.0;
    double sinr_j = 0.0;
    double sinr_i2 = 0.0;
    bool outage_first = false;
    bool outage_second = false;
    SplitRole splitting_user = SplitRole::none;
    // Time shares of OMA; both 0 for the non-orthogonal strategies.
    double share_first = 0.0;
    double share_second = 0.0;
};

struct SicSinrs
{
    double i1;
    double j;
    double i2;
};

// SINR_i1 = b e_i / ((1-b) e_i + e_j + 1), SINR_j = e_j / ((1-b) e_i + 1), SINR_i2 = (1-b) e_i
SicSinrs sic_sinrs(double eta_i, double eta_j, double beta);

// Target rates (bit/s/Hz) used for outage flags.
struct RateTargets
{
    double first = 0.0;
    double second = 0.0;
};

// Cognitive rule: the primary (first) is protected at rate targets.first; the secondary splits.
TransmissionOutcome cpa_decide(double eta_p, double eta_s, const RateTargets &targets);

// Equal-rate rule on the sum-capacity line when feasible; the smaller effective SNR splits.
TransmissionOutcome fpa_decide(double eta_i, double eta_j, const RateTargets &targets = {});

// Cognitive rule restricted to beta in {0, 1}.
TransmissionOutcome noma_cpa_baseline(double eta_p, double eta_s, const RateTargets &targets);

// Orthogonal time sharing with t_k proportional to the channel gain. The gain overload
// computes the shares from the gains so they do not depend on the transmit SNR rho.
TransmissionOutcome oma_baseline(double eta_i, double eta_j, const RateTargets &targets = {});
TransmissionOutcome oma_baseline(double gain_i, double gain_j, double rho, const RateTargets &targets = {});

// NOMA with the stronger user decoded first.
TransmissionOutcome noma_strong_first(double eta_i, double eta_j, const RateTargets &targets = {});

// Fairer of noma_strong_first and oma_baseline by per-realization Jain index; ties go to OMA.
TransmissionOutcome hybrid_baseline(double eta_i, double eta_j, const RateTargets &targets = {});
TransmissionOutcome hybrid_baseline(double gain_i, double gain_j, double rho, const RateTargets &targets = {});

// (r1 + r2)^2 / (2 (r1^2 + r2^2)); 1 when both rates are 0.
double jain_index(double rate_a, double rate_b);
double jain_index(const TransmissionOutcome &o);

// Dispatch by strategy. CPA/NOMA read (first, second) as (primary, secondary).
TransmissionOutcome decide(Strategy s, double eta_first, double eta_second, const RateTargets &targets);

} // namespace rsma

#endif
