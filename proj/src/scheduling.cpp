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

#include "rsma/scheduling.hpp"

#include <stdexcept>

namespace rsma
{

std::string_view to_string(Scheme s)
{
    switch (s)
    {
    case Scheme::GUS:
        return "GUS";
    case Scheme::CUS:
        return "CUS";
    case Scheme::RUS:
        return "RUS";
    }
    return "?";
}

namespace
{
void require_pair(std::size_t K)
{
    if (K < 2)
        throw std::invalid_argument("scheduling needs at least 2 users");
}

// Indices of the two largest entries; strict comparisons keep the lower index on ties.
std::pair<std::size_t, std::size_t> top_two(const std::vector<double> &v)
{
    require_pair(v.size());
    std::size_t best = 0, next = 1;
    if (v[1] > v[0])
        std::swap(best, next);
    for (std::size_t k = 2; k < v.size(); ++k)
    {
        if (v[k] > v[best])
        {
            next = best;
            best = k;
        }
        else if (v[k] > v[next])
            next = k;
    }
    return {best, next};
}

ScheduledPair make_pair(const ChannelRealization &real, std::size_t first, std::size_t second, Scheme s)
{
    ScheduledPair p;
    p.first = first;
    p.second = second;
    p.scheme = s;
    p.gain_first = real.gains[first];
    p.gain_second = real.gains[second];
    return p;
}
} // namespace

ScheduledPair select_gus(const ChannelRealization &real)
{
    const auto [a, b] = top_two(real.gains);
    return make_pair(real, a, b, Scheme::GUS);
}

ScheduledPair select_cus(const ChannelRealization &real)
{
    const auto [a, b] = top_two(real.cdf_values);
    return make_pair(real, a, b, Scheme::CUS);
}

ScheduledPair select_rus(const ChannelRealization &real, RandomStream &rng)
{
    const std::size_t K = real.gains.size();
    require_pair(K);
    std::size_t a = rng.below(K);
    std::size_t b = rng.below(K - 1);
    if (b >= a)
        ++b;
    if (b < a)
        std::swap(a, b);
    if (real.gains[b] > real.gains[a])
        std::swap(a, b);
    return make_pair(real, a, b, Scheme::RUS);
}

ScheduledPair select(Scheme s, const ChannelRealization &real, RandomStream &rng)
{
    switch (s)
    {
    case Scheme::GUS:
        return select_gus(real);
    case Scheme::CUS:
        return select_cus(real);
    case Scheme::RUS:
        return select_rus(real, rng);
    }
    throw std::logic_error("unknown scheme");
}

std::vector<double> admission_histogram(const std::vector<ScheduledPair> &trials, std::size_t K)
{
    if (trials.empty())
        throw std::invalid_argument("admission_histogram: no trials");
    std::vector<double> counts(K, 0.0);
    for (const auto &p : trials)
    {
        if (p.first >= K || p.second >= K)
            throw std::out_of_range("admission_histogram: user index outside [0, K)");
        counts[p.first] += 1.0;
        counts[p.second] += 1.0;
    }
    for (auto &c : counts)
        c /= double(trials.size());
    return counts;
}

} // namespace rsma
