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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace rsma;
using Catch::Approx;

namespace
{
double log2_1p(double v) { return std::log2(1.0 + v); }

// log-uniform effective SNR over 1e-3 .. 1e6
double draw(std::mt19937_64 &g) { return std::pow(10.0, std::uniform_real_distribution<double>(-3.0, 6.0)(g)); }
} // namespace

TEST_CASE("SIC SINRs")
{
    const auto s = sic_sinrs(10.0, 5.0, 0.4);
    CHECK(s.i1 == Approx(4.0 / 12.0));
    CHECK(s.j == Approx(5.0 / 7.0));
    CHECK(s.i2 == Approx(6.0));
    // the three streams reach the sum capacity
    CHECK(log2_1p(s.i1) + log2_1p(s.j) + log2_1p(s.i2) == Approx(log2_1p(15.0)).epsilon(1e-14));
}

TEST_CASE("cognitive rule: three channel cases")
{
    const RateTargets t{1.0, 1.0};
    // primary below target alone
    auto o = cpa_decide(0.5, 8.0, t);
    CHECK(o.beta == 1.0);
    CHECK(o.outage_first);
    CHECK(o.rate_second == Approx(log2_1p(8.0 / 1.5)));
    // primary decodable under full interference
    o = cpa_decide(20.0, 3.0, t);
    CHECK(o.beta == 0.0);
    CHECK_FALSE(o.outage_first);
    CHECK(o.rate_second == Approx(2.0));
    CHECK(o.rate_first == Approx(log2_1p(5.0)));
    // split: the primary sits exactly at its target
    o = cpa_decide(3.0, 4.0, t);
    CHECK((o.beta > 0.0 && o.beta < 1.0));
    CHECK(o.beta == Approx(1.0 - (3.0 - 1.0) / (4.0 * 1.0)));
    CHECK(log2_1p(o.sinr_j) == Approx(1.0).epsilon(1e-14));
    CHECK(o.rate_second == Approx(log2_1p(7.0) - 1.0).epsilon(1e-14));
    CHECK(o.splitting_user == SplitRole::second);
}

TEST_CASE("cognitive split identity on random draws")
{
    std::mt19937_64 g(21);
    int split = 0;
    for (int t = 0; t < 100000; ++t)
    {
        const double ep = draw(g), es = draw(g), rp = std::uniform_real_distribution<double>(0.1, 4.0)(g);
        const auto o = cpa_decide(ep, es, {rp, 1.0});
        REQUIRE((o.beta >= 0.0 && o.beta <= 1.0));
        if (o.beta > 0.0 && o.beta < 1.0)
        {
            ++split;
            REQUIRE(std::abs(o.rate_second - (log2_1p(ep + es) - rp)) <= 1e-9);
        }
        const auto n = noma_cpa_baseline(ep, es, {rp, 1.0});
        REQUIRE((n.beta == 0.0 || n.beta == 1.0));
        REQUIRE(o.rate_second >= n.rate_second - 1e-12);
    }
    CHECK(split > 1000);
}

TEST_CASE("fairness rule: equal rates on the sum-capacity line")
{
    std::mt19937_64 g(5);
    int equal_branch = 0;
    for (int t = 0; t < 100000; ++t)
    {
        const double a = draw(g), b = draw(g);
        const auto o = fpa_decide(a, b);
        REQUIRE((o.beta >= 0.0 && o.beta <= 1.0));
        const double sum = o.rate_first + o.rate_second;
        REQUIRE(std::abs(sum - log2_1p(a + b)) <= 1e-9);
        const double hi = std::max(a, b), lo = std::min(a, b);
        if (hi < lo + lo * lo)
        {
            ++equal_branch;
            REQUIRE(std::abs(o.rate_first - o.rate_second) <= 1e-9);
        }
        else
        {
            // larger user decoded first under full interference, smaller user interference free
            REQUIRE(o.beta == 0.0);
            REQUIRE(std::max(o.rate_first, o.rate_second) == Approx(log2_1p(hi / (lo + 1.0))));
        }
    }
    CHECK(equal_branch > 1000);
}

TEST_CASE("fairness rule: which user splits")
{
    const auto o = fpa_decide(5.0, 4.0);
    CHECK(o.splitting_user == SplitRole::second);
    CHECK(o.rate_first == Approx(o.rate_second).epsilon(1e-12));
    CHECK(o.rate_first == Approx(0.5 * log2_1p(9.0)));
    const auto p = fpa_decide(4.0, 5.0);
    CHECK(p.splitting_user == SplitRole::first);
    // beta from the closed form 1 + 1/eta_j - eta_i / (eta_j (sqrt(1 + eta_i + eta_j) - 1))
    CHECK(o.beta == Approx(1.0 + 1.0 / 4.0 - 5.0 / (4.0 * (std::sqrt(10.0) - 1.0))).epsilon(1e-12));
    const auto q = fpa_decide(100.0, 2.0, {1.0, 1.0});
    CHECK(q.beta == 0.0);
    CHECK_FALSE(q.outage_first);
    CHECK_FALSE(q.outage_second);
}

TEST_CASE("NOMA strong-first and OMA baselines")
{
    const auto n = noma_strong_first(3.0, 9.0);
    CHECK(n.rate_second == Approx(log2_1p(9.0 / 4.0)));
    CHECK(n.rate_first == Approx(2.0));
    const auto o = oma_baseline(3.0, 9.0);
    CHECK(o.share_first == 0.25);
    CHECK(o.share_second == 0.75);
    CHECK(o.rate_first + o.rate_second == Approx(log2_1p(12.0)));
    const auto z = oma_baseline(0.0, 0.0);
    CHECK(z.rate_first == 0.0);
    CHECK(jain_index(z) == 1.0);
}

TEST_CASE("OMA Jain index does not depend on transmit power")
{
    std::mt19937_64 g(8);
    for (int t = 0; t < 10000; ++t)
    {
        const double gi = draw(g) * 1e-10, gj = draw(g) * 1e-10;
        const double j1 = jain_index(oma_baseline(gi, gj, 1e9));
        REQUIRE(jain_index(oma_baseline(gi, gj, 1e12)) == j1);
        REQUIRE(jain_index(oma_baseline(gi, gj, 1e14)) == j1);
    }
}

TEST_CASE("Jain index bounds and hybrid choice")
{
    CHECK(jain_index(1.0, 1.0) == 1.0);
    CHECK(jain_index(1.0, 0.0) == 0.5);
    CHECK(jain_index(0.0, 0.0) == 1.0);
    std::mt19937_64 g(2);
    for (int t = 0; t < 10000; ++t)
    {
        const double a = draw(g), b = draw(g);
        const auto h = hybrid_baseline(a, b);
        const double jn = jain_index(noma_strong_first(a, b)), jo = jain_index(oma_baseline(a, b));
        REQUIRE(jain_index(h) == std::max(jn, jo));
        REQUIRE(h.strategy == Strategy::HYBRID);
        const double jf = jain_index(fpa_decide(a, b));
        REQUIRE((jf >= 0.5 && jf <= 1.0));
    }
}

TEST_CASE("dispatch and names")
{
    const RateTargets t{1.0, 1.0};
    CHECK(decide(Strategy::CPA, 3.0, 4.0, t).rate_second == cpa_decide(3.0, 4.0, t).rate_second);
    CHECK(decide(Strategy::FPA, 3.0, 4.0, t).rate_second == fpa_decide(3.0, 4.0, t).rate_second);
    CHECK(decide(Strategy::NOMA, 3.0, 4.0, t).strategy == Strategy::NOMA);
    CHECK(decide(Strategy::OMA, 3.0, 4.0, t).strategy == Strategy::OMA);
    CHECK(decide(Strategy::HYBRID, 3.0, 4.0, t).strategy == Strategy::HYBRID);
    CHECK(to_string(Strategy::HYBRID) == "HYBRID");
}
