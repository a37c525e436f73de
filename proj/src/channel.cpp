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

#include "rsma/channel.hpp"
#include "rsma/analytic_context.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rsma
{

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream)
{
    std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(stream),
                      std::uint32_t(stream >> 32)};
    engine_.seed(seq);
}

std::uint64_t RandomStream::below(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("RandomStream::below: empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do
        v = engine_();
    while (v >= limit);
    return v % n;
}

namespace
{
void fill_user(const SystemConfig &cfg, double r, RandomStream &rng, ChannelRealization &out, std::size_t k)
{
    const double fading = rng.exponential();
    const double path = 1.0 + std::pow(r, cfg.alpha);
    out.distances[k] = r;
    out.gains[k] = fading / path;
    out.cdf_values[k] = -std::expm1(-path * out.gains[k]);
}

void resize(ChannelRealization &out, std::size_t K)
{
    out.distances.resize(K);
    out.gains.resize(K);
    out.cdf_values.resize(K);
}
} // namespace

void sample_realization(const SystemConfig &cfg, RandomStream &rng, ChannelRealization &out)
{
    resize(out, cfg.K);
    for (std::size_t k = 0; k < cfg.K; ++k)
    {
        const double r = cfg.radius_m * std::sqrt(rng.uniform());
        fill_user(cfg, r, rng, out, k);
    }
}

ChannelRealization sample_realization(const SystemConfig &cfg, RandomStream &rng)
{
    ChannelRealization out;
    sample_realization(cfg, rng, out);
    return out;
}

void sample_realization_at(const SystemConfig &cfg, const std::vector<double> &distances, RandomStream &rng,
                           ChannelRealization &out)
{
    if (distances.size() != cfg.K)
        throw std::invalid_argument("sample_realization_at: need one distance per user");
    resize(out, cfg.K);
    for (std::size_t k = 0; k < cfg.K; ++k)
        fill_user(cfg, distances[k], rng, out, k);
}

double conditional_gain_cdf(double x, double r, double alpha)
{
    if (x <= 0.0)
        return 0.0;
    return -std::expm1(-(1.0 + std::pow(r, alpha)) * x);
}

double unordered_gain_cdf(double x, const AnalyticContext &ctx)
{
    return std::clamp(ctx.cdf(x), 0.0, 1.0);
}

double unordered_gain_pdf(double x, const AnalyticContext &ctx) { return ctx.pdf(x); }

} // namespace rsma
