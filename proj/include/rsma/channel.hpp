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

#ifndef RSMA_CHANNEL_HPP
#define RSMA_CHANNEL_HPP

#include "rsma/config.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace rsma
{

class AnalyticContext;

// Substream (seed, stream) of a 64-bit Mersenne Twister seeded through std::seed_seq.
// Both are fully specified by the standard, so sequences are identical on every platform.
class RandomStream
{
  public:
    RandomStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }

    // Unit-rate exponential.
    double exponential() { return -std::log1p(-uniform()); }

    // Uniform integer in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n);

  private:
    std::mt19937_64 engine_;
};

struct ChannelRealization
{
    std::vector<double> distances;
    std::vector<double> gains;
    std::vector<double> cdf_values;
};

// Distances with density 2z/R^2, Rayleigh fading, bounded path loss 1 + r^alpha.
ChannelRealization sample_realization(const SystemConfig &cfg, RandomStream &rng);
void sample_realization(const SystemConfig &cfg, RandomStream &rng, ChannelRealization &out);

// Fading only; distances are given (size K).
void sample_realization_at(const SystemConfig &cfg, const std::vector<double> &distances, RandomStream &rng,
                           ChannelRealization &out);

// 1 - exp(-(1 + r^alpha) x)
double conditional_gain_cdf(double x, double r, double alpha);

// Gauss-Chebyshev approximation of the distance-averaged gain CDF, clamped to [0, 1].
double unordered_gain_cdf(double x, const AnalyticContext &ctx);

double unordered_gain_pdf(double x, const AnalyticContext &ctx);

} // namespace rsma

#endif
