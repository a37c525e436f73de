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


#ifndef RSMA_MONTECARLO_HPP
#define RSMA_MONTECARLO_HPP

#include "rsma/config.hpp"
#include "rsma/power_alloc.hpp"
#include "rsma/scheduling.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rsma
{

// Trials are split into blocks of this size; block b draws from RandomStream(seed, b).
inline constexpr std::uint64_t mc_block_size = 1u << 16;

// Below this estimate a proportion's normal-approximation interval is not reported.
inline constexpr double mc_insufficient_below = 1e-4;

struct EstimateResult
{
    std::string metric;
    double estimate = 0.0;
    std::uint64_t trials = 0;
    double half_width = 0.0; // 1.96 standard errors
    std::uint64_t seed = 0;
    std::uint64_t fingerprint = 0;
    bool insufficient = false; // proportion below mc_insufficient_below
};

// 1.96 sqrt(p (1 - p) / n)
double proportion_half_width(double p, std::uint64_t n);

struct McOptions
{
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    // 0: read RSMA_WORKERS, falling back to the hardware concurrency.
    unsigned workers = 0;
    // Cognitive strategies: make the second scheduled member the primary user.
    bool swap_roles = false;
    // Fixed user distances (size K) instead of uniform placement in the disc.
    std::optional<std::vector<double>> distances;
    // Fixed channel gains (size K); no randomness is drawn for the channel.
    std::optional<std::vector<double>> gains;
};

unsigned resolve_workers(unsigned requested);

// Transmission of a scheduled pair. Cognitive strategies (CPA, NOMA) read the pair as
// (primary, secondary) unless swap_roles; the others keep the scheduling order.
TransmissionOutcome transmit(Strategy strategy, const ScheduledPair &pair, double rho, const TargetRates &targets,
                             bool swap_roles = false);

// Outcome roles: (primary, secondary) for CPA/NOMA, (first, second) pair member otherwise.
struct OutageEstimate
{
    EstimateResult first;
    EstimateResult second;
};

std::vector<OutageEstimate> estimate_outage_sweep(const SystemConfig &cfg, Scheme scheme, Strategy strategy,
                                                  const std::vector<double> &rhos, const McOptions &opt);
OutageEstimate estimate_outage(const SystemConfig &cfg, Scheme scheme, Strategy strategy, double rho,
                               const McOptions &opt);

enum class RateMetric
{
    second, // secondary user (cognitive) or second pair member
    first,
    sum
};

std::vector<EstimateResult> estimate_ergodic_rate_sweep(const SystemConfig &cfg, Scheme scheme, Strategy strategy,
                                                        const std::vector<double> &rhos, const McOptions &opt,
                                                        RateMetric metric = RateMetric::second);
EstimateResult estimate_ergodic_rate(const SystemConfig &cfg, Scheme scheme, Strategy strategy, double rho,
                                     const McOptions &opt, RateMetric metric = RateMetric::second);

// Fairness comparison on common channel draws. NOMA here is the stronger-first baseline;
// OMA and HYBRID use gain-proportional time shares.
struct FairnessStats
{
    Strategy strategy = Strategy::FPA;
    EstimateResult jain;
    // Per-user rates of every trial (both pair members), sorted ascending.
    std::vector<double> rates;
    double rate_percentile(double q) const;
    // Empirical CDF of the per-user rate at x.
    double rate_cdf(double x) const;
};

struct FairnessReport
{
    std::vector<FairnessStats> strategies;
    // Trials with J outside [1/2, 1].
    std::uint64_t jain_bound_violations = 0;
    // Trials where the hybrid index differs from max(NOMA, OMA); counted only when all three are present.
    std::uint64_t hybrid_mismatches = 0;
    // Spot checks of outcome invariants that failed.
    std::uint64_t invariant_failures = 0;
    std::uint64_t invariant_checks = 0;
};

FairnessReport estimate_fairness(const SystemConfig &cfg, Scheme scheme, const std::vector<Strategy> &strategies,
                                 double rho, const McOptions &opt, bool keep_rates = true);

// Frequency with which each user is scheduled; entries sum to 2.
std::vector<EstimateResult> estimate_admission(const SystemConfig &cfg, Scheme scheme, const McOptions &opt);

// Gains (first, second) of the scheduled pair in every trial, in trial order.
std::vector<std::pair<double, double>> sample_scheduled_gains(const SystemConfig &cfg, Scheme scheme,
                                                              const McOptions &opt);

// Rate and SINR relations every outcome must satisfy; used for spot checks.
bool outcome_consistent(const TransmissionOutcome &o, double eta_i, double eta_j);

} // namespace rsma

#endif
