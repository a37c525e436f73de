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

#ifndef RSMA_SCHEDULING_HPP
#define RSMA_SCHEDULING_HPP

#include "rsma/channel.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace rsma
{

enum class Scheme
{
    GUS, // two largest gains
    CUS, // two largest values of each user's own conditional gain CDF
    RUS  // uniformly random pair
};

std::string_view to_string(Scheme s);

struct ScheduledPair
{
    std::size_t first = 0;
    std::size_t second = 1;
    Scheme scheme = Scheme::GUS;
    double gain_first = 0.0;
    double gain_second = 0.0;
};

// Ties go to the lower index.
ScheduledPair select_gus(const ChannelRealization &real);
ScheduledPair select_cus(const ChannelRealization &real);

// Uniform unordered pair; the member with the larger gain becomes `first`
// (lower index on equal gains).
ScheduledPair select_rus(const ChannelRealization &real, RandomStream &rng);

ScheduledPair select(Scheme s, const ChannelRealization &real, RandomStream &rng);

// Per-user scheduling frequency; entries sum to 2.
std::vector<double> admission_histogram(const std::vector<ScheduledPair> &trials, std::size_t K);

} // namespace rsma

#endif
