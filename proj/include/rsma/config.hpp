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

#ifndef RSMA_CONFIG_HPP
#define RSMA_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <string>

namespace rsma
{

// Orders of the Gauss-Chebyshev rules. L: unordered gain CDF; M, Q, N, B: joint CDF of the
// CUS pair; outer: the rule applied to the integrals of the CUS outage expressions.
struct QuadratureOrders
{
    std::size_t L = 10;
    std::size_t M = 10;
    std::size_t Q = 10;
    std::size_t N = 10;
    std::size_t B = 10;
    std::size_t outer = 10;
};

// Target rates in bit/s/Hz. primary/secondary apply to the cognitive strategy,
// first/second to the fairness strategy.
struct TargetRates
{
    double primary = 1.0;
    double secondary = 1.0;
    double first = 1.0;
    double second = 1.0;
};

struct SystemConfig
{
    unsigned K = 4;
    double radius_m = 500.0;
    double alpha = 3.76;
    double noise_power_dbm = -100.0;
    double p_max_dbm = 20.0;
    QuadratureOrders orders;
    TargetRates targets;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;

    // Linear transmit SNR at p_max_dbm.
    double rho() const;

    // Linear transmit SNR at a given transmit power.
    double rho_at(double power_dbm) const;

    std::string fingerprint_text() const;
};

double db_to_linear(double db);
double linear_to_db(double linear);

// 2^rate - 1
double target_sinr(double rate);

// 64-bit FNV-1a of a string; used for scenario fingerprints.
std::uint64_t fnv1a(const std::string &text);

} // namespace rsma

#endif
