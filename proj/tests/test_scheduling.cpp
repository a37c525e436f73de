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

#include <catch_amalgamated.hpp>

using namespace rsma;

namespace
{
ChannelRealization realization(std::vector<double> gains, std::vector<double> cdfs)
{
    ChannelRealization r;
    r.distances.assign(gains.size(), 100.0);
    r.gains = std::move(gains);
    r.cdf_values = std::move(cdfs);
    return r;
}
} // namespace

TEST_CASE("greedy picks the two largest gains")
{
    const auto r = realization({0.3, 0.9, 0.1, 0.5}, {0.9, 0.1, 0.8, 0.2});
    const auto p = select_gus(r);
    CHECK(p.first == 1);
    CHECK(p.second == 3);
    CHECK(p.gain_first == 0.9);
    CHECK(p.gain_second == 0.5);
    CHECK(p.scheme == Scheme::GUS);
}

TEST_CASE("CDF-based picks the two largest CDF values")
{
    const auto r = realization({0.3, 0.9, 0.1, 0.5}, {0.9, 0.1, 0.8, 0.2});
    const auto p = select_cus(r);
    CHECK(p.first == 0);
    CHECK(p.second == 2);
    CHECK(p.gain_first == 0.3);
    CHECK(p.gain_second == 0.1);
}

TEST_CASE("ties go to the lower index")
{
    const auto r = realization({0.5, 0.5, 0.5}, {0.2, 0.2, 0.2});
    const auto g = select_gus(r);
    CHECK(g.first == 0);
    CHECK(g.second == 1);
    const auto c = select_cus(r);
    CHECK(c.first == 0);
    CHECK(c.second == 1);
}

TEST_CASE("random pair is uniform and ordered by gain")
{
    const auto r = realization({0.3, 0.9, 0.1, 0.5}, {0.9, 0.1, 0.8, 0.2});
    RandomStream rng(9, 0);
    std::vector<ScheduledPair> trials;
    for (int t = 0; t < 60000; ++t)
    {
        const auto p = select(Scheme::RUS, r, rng);
        CHECK(p.first != p.second);
        CHECK(p.gain_first >= p.gain_second);
        trials.push_back(p);
    }
    const auto h = admission_histogram(trials, 4);
    for (double f : h)
        CHECK(std::abs(f - 0.5) < 0.01);
}

TEST_CASE("admission histogram")
{
    std::vector<ScheduledPair> t(2);
    t[0].first = 0;
    t[0].second = 1;
    t[1].first = 0;
    t[1].second = 2;
    const auto h = admission_histogram(t, 3);
    CHECK(h == std::vector<double>{1.0, 0.5, 0.5});
    CHECK_THROWS_AS(admission_histogram({}, 3), std::invalid_argument);
    t[1].second = 5;
    CHECK_THROWS_AS(admission_histogram(t, 3), std::out_of_range);
    CHECK_THROWS_AS(select_gus(realization({1.0}, {0.5})), std::invalid_argument);
}

TEST_CASE("scheme names")
{
    CHECK(to_string(Scheme::GUS) == "GUS");
    CHECK(to_string(Scheme::CUS) == "CUS");
    CHECK(to_string(Scheme::RUS) == "RUS");
}
