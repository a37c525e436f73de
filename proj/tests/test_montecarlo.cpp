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


#include "rsma/analytic_outage.hpp"
#include "rsma/montecarlo.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace rsma;
using Catch::Approx;

namespace
{
McOptions options(std::uint64_t trials, std::uint64_t seed = 7, unsigned workers = 1)
{
    McOptions o;
    o.trials = trials;
    o.seed = seed;
    o.workers = workers;
    return o;
}

bool same(const EstimateResult &a, const EstimateResult &b)
{
    return a.metric == b.metric && a.estimate == b.estimate && a.half_width == b.half_width && a.trials == b.trials &&
           a.seed == b.seed && a.fingerprint == b.fingerprint && a.insufficient == b.insufficient;
}
} // namespace

TEST_CASE("proportion half-width")
{
    CHECK(proportion_half_width(0.5, 10000) == Approx(1.96 * 0.005).epsilon(1e-12));
    CHECK(proportion_half_width(0.0, 100) == 0.0);
    CHECK(proportion_half_width(1.0, 100) == 0.0);
    CHECK(proportion_half_width(0.3, 0) == 0.0);
}

TEST_CASE("estimates are reproducible and independent of the worker count")
{
    const SystemConfig cfg;
    const std::vector<double> rhos{cfg.rho_at(0.0), cfg.rho_at(10.0)};
    // several blocks so that the workers interleave
    const auto one = estimate_outage_sweep(cfg, Scheme::CUS, Strategy::FPA, rhos, options(200000, 3, 1));
    const auto three = estimate_outage_sweep(cfg, Scheme::CUS, Strategy::FPA, rhos, options(200000, 3, 3));
    const auto again = estimate_outage_sweep(cfg, Scheme::CUS, Strategy::FPA, rhos, options(200000, 3, 1));
    for (std::size_t k = 0; k < rhos.size(); ++k)
    {
        CHECK(same(one[k].first, three[k].first));
        CHECK(same(one[k].second, three[k].second));
        CHECK(same(one[k].first, again[k].first));
    }
    const auto r1 = estimate_ergodic_rate(cfg, Scheme::GUS, Strategy::CPA, rhos[1], options(150000, 3, 1));
    const auto r3 = estimate_ergodic_rate(cfg, Scheme::GUS, Strategy::CPA, rhos[1], options(150000, 3, 3));
    CHECK(same(r1, r3));

    const auto other = estimate_outage_sweep(cfg, Scheme::CUS, Strategy::FPA, rhos, options(200000, 4, 1));
    CHECK(other[0].first.estimate != one[0].first.estimate);
    CHECK(other[0].first.fingerprint == one[0].first.fingerprint);
    CHECK(one[0].first.fingerprint != one[1].first.fingerprint);
}

TEST_CASE("single deterministic trial reproduces the cognitive rule")
{
    SystemConfig cfg;
    cfg.targets.primary = 2.0; // gamma_p = 3
    McOptions opt = options(1);
    opt.gains = std::vector<double>{5.0, 4.0, 0.1, 0.2};
    const auto r = estimate_ergodic_rate(cfg, Scheme::GUS, Strategy::CPA, 1.0, opt);
    CHECK(r.trials == 1);
    CHECK(r.estimate == Approx(std::log2(10.0) - 2.0).epsilon(1e-12));
    CHECK(r.estimate == Approx(1.32193).epsilon(1e-5));
    CHECK(r.half_width == 0.0);

    const auto o = estimate_outage(cfg, Scheme::GUS, Strategy::CPA, 1.0, opt);
    CHECK(o.first.estimate == 0.0);
    CHECK(o.second.estimate == 0.0);
    cfg.targets.secondary = 1.5;
    CHECK(estimate_outage(cfg, Scheme::GUS, Strategy::CPA, 1.0, opt).second.estimate == 1.0);
}

TEST_CASE("trivial outage limits")
{
    SystemConfig cfg;
    cfg.targets = {0.0, 0.0, 0.0, 0.0};
    for (Strategy s : {Strategy::CPA, Strategy::FPA, Strategy::NOMA, Strategy::OMA})
    {
        const auto o = estimate_outage(cfg, Scheme::GUS, s, cfg.rho_at(10.0), options(20000));
        CHECK(o.first.estimate == 0.0);
        CHECK(o.second.estimate == 0.0);
        CHECK(o.second.insufficient);
    }
    const SystemConfig def;
    for (Strategy s : {Strategy::CPA, Strategy::FPA})
    {
        const auto o = estimate_outage(def, Scheme::CUS, s, def.rho_at(-60.0), options(20000));
        CHECK(o.second.estimate >= 0.999);
        CHECK_FALSE(o.second.insufficient);
    }
}

TEST_CASE("outage is non-increasing in transmit power")
{
    const SystemConfig cfg;
    std::vector<double> rhos;
    for (double p = -10.0; p <= 30.0; p += 5.0)
        rhos.push_back(cfg.rho_at(p));
    for (Scheme sc : {Scheme::GUS, Scheme::CUS, Scheme::RUS})
        for (Strategy st : {Strategy::CPA, Strategy::FPA, Strategy::NOMA})
        {
            const auto est = estimate_outage_sweep(cfg, sc, st, rhos, options(50000));
            for (std::size_t k = 0; k + 1 < est.size(); ++k)
            {
                CHECK(est[k + 1].first.estimate <= est[k].first.estimate + 3 * est[k].first.half_width + 1e-12);
                CHECK(est[k + 1].second.estimate <= est[k].second.estimate + 3 * est[k].second.half_width + 1e-12);
            }
        }
}

TEST_CASE("greedy cognitive outage agrees with the closed form")
{
    const SystemConfig cfg;
    const AnalyticContext ctx(cfg);
    const double rho = cfg.rho_at(10.0);
    const auto o = estimate_outage(cfg, Scheme::GUS, Strategy::CPA, rho, options(1000000, 11));
    const double an = outage_cpa_gus(ctx, rho, cfg.targets.primary, cfg.targets.secondary);
    CHECK(std::abs(o.second.estimate - an) <= 3 * o.second.half_width);
}

TEST_CASE("rate splitting never loses ergodic rate to the NOMA baseline")
{
    SystemConfig cfg;
    cfg.targets.primary = 3.0;
    std::vector<double> rhos;
    for (double p = -40.0; p <= 30.0; p += 10.0)
        rhos.push_back(cfg.rho_at(p));
    for (Scheme sc : {Scheme::GUS, Scheme::CUS, Scheme::RUS})
    {
        const auto rsma = estimate_ergodic_rate_sweep(cfg, sc, Strategy::CPA, rhos, options(50000));
        const auto noma = estimate_ergodic_rate_sweep(cfg, sc, Strategy::NOMA, rhos, options(50000));
        for (std::size_t k = 0; k < rhos.size(); ++k)
            CHECK(rsma[k].estimate >= noma[k].estimate);
        // the primary is almost always in outage at low power and both decode the secondary whole;
        // users close to the receiver keep a gap that vanishes only with the power
        for (std::size_t k = 0; k + 1 < 4; ++k)
            CHECK(rsma[k].estimate - noma[k].estimate <= rsma[k + 1].estimate - noma[k + 1].estimate);
        CHECK(rsma[0].estimate - noma[0].estimate <= 2e-4);
    }
}

TEST_CASE("fairness statistics on common channel draws")
{
    const SystemConfig cfg;
    const std::vector<Strategy> all{Strategy::FPA, Strategy::NOMA, Strategy::OMA, Strategy::HYBRID};
    const auto rep = estimate_fairness(cfg, Scheme::CUS, all, cfg.rho_at(30.0), options(40000));
    CHECK(rep.hybrid_mismatches == 0);
    CHECK(rep.jain_bound_violations == 0);
    CHECK(rep.invariant_checks == 4 * 400);
    CHECK(rep.invariant_failures == 0);
    REQUIRE(rep.strategies.size() == 4);
    const double fpa = rep.strategies[0].jain.estimate;
    CHECK(fpa >= 0.99);
    for (std::size_t k = 1; k < 4; ++k)
        CHECK(fpa >= rep.strategies[k].jain.estimate);
    // hybrid is at least as fair as either baseline on average
    CHECK(rep.strategies[3].jain.estimate >= rep.strategies[1].jain.estimate);
    CHECK(rep.strategies[3].jain.estimate >= rep.strategies[2].jain.estimate);
    for (const auto &st : rep.strategies)
    {
        CHECK(st.rates.size() == 80000);
        CHECK(std::is_sorted(st.rates.begin(), st.rates.end()));
        const double p10 = st.rate_percentile(0.1);
        CHECK(st.rate_cdf(p10) >= 0.1);
        CHECK(st.rate_cdf(std::nextafter(p10, 0.0)) < 0.1);
        CHECK(st.rate_percentile(0.0) == st.rates.front());
        CHECK(st.rate_percentile(1.0) == st.rates.back());
    }
    CHECK_THROWS_AS(rep.strategies[0].rate_percentile(1.5), std::invalid_argument);

    const auto lean = estimate_fairness(cfg, Scheme::CUS, all, cfg.rho_at(30.0), options(40000), false);
    CHECK(lean.strategies[0].rates.empty());
    CHECK(lean.strategies[0].jain.estimate == fpa);
    CHECK_THROWS_AS(lean.strategies[0].rate_cdf(1.0), std::logic_error);
}

TEST_CASE("equal gains give a perfectly fair pair")
{
    const SystemConfig cfg;
    McOptions opt = options(3);
    opt.gains = std::vector<double>{1e-9, 1e-9, 1e-12, 1e-12};
    const auto rep = estimate_fairness(cfg, Scheme::GUS, {Strategy::FPA, Strategy::OMA}, cfg.rho_at(20.0), opt);
    CHECK(rep.strategies[0].jain.estimate == Approx(1.0).epsilon(1e-12));
    CHECK(rep.strategies[1].jain.estimate == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("admission frequencies")
{
    SystemConfig cfg;
    McOptions opt = options(200000, 5);
    opt.distances = std::vector<double>{100.0, 200.0, 300.0, 400.0};
    for (Scheme sc : {Scheme::CUS, Scheme::RUS})
    {
        const auto a = estimate_admission(cfg, sc, opt);
        REQUIRE(a.size() == 4);
        double total = 0.0;
        for (const auto &e : a)
        {
            total += e.estimate;
            CHECK(e.estimate == Approx(0.5).margin(0.01));
        }
        CHECK(total == Approx(2.0).epsilon(1e-12));
    }
    const auto g = estimate_admission(cfg, Scheme::GUS, opt);
    for (std::size_t k = 0; k + 1 < g.size(); ++k)
        CHECK(g[k].estimate > g[k + 1].estimate);
}

TEST_CASE("scheduled gains follow the scheduling rule")
{
    const SystemConfig cfg;
    const auto gus = sample_scheduled_gains(cfg, Scheme::GUS, options(70000));
    CHECK(gus.size() == 70000);
    for (const auto &[a, b] : gus)
        CHECK(a >= b);
    CHECK(gus == sample_scheduled_gains(cfg, Scheme::GUS, options(70000, 7, 2)));
}

TEST_CASE("role swap changes which member is protected")
{
    const SystemConfig cfg;
    McOptions opt = options(1);
    opt.gains = std::vector<double>{4.0, 0.5, 0.1, 0.1};
    const ScheduledPair pair{0, 1, Scheme::GUS, 4.0, 0.5};
    const auto plain = transmit(Strategy::CPA, pair, 1.0, cfg.targets);
    const auto swapped = transmit(Strategy::CPA, pair, 1.0, cfg.targets, true);
    CHECK(plain.outage_first == false); // eta_p = 4 meets gamma_p = 1
    CHECK(swapped.outage_first == true); // eta_p = 0.5 does not
    CHECK(transmit(Strategy::FPA, pair, 1.0, cfg.targets, true).rate_first ==
          transmit(Strategy::FPA, pair, 1.0, cfg.targets).rate_first);
}

TEST_CASE("invalid options are rejected")
{
    const SystemConfig cfg;
    McOptions opt = options(10);
    opt.distances = std::vector<double>{100.0};
    CHECK_THROWS_AS(estimate_admission(cfg, Scheme::GUS, opt), std::invalid_argument);
    CHECK_THROWS_AS(estimate_outage(cfg, Scheme::GUS, Strategy::CPA, 1.0, options(0)), std::invalid_argument);
    SystemConfig bad;
    bad.K = 1;
    CHECK_THROWS_AS(estimate_outage(bad, Scheme::GUS, Strategy::CPA, 1.0, options(10)), std::invalid_argument);
}
