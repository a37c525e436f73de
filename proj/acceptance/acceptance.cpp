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


// Acceptance run: one PASS/FAIL line per criterion, followed by the individual checks.
// Tolerances and trial counts are fixed here and do not read any configuration file.

#include "rsma/analytic_outage.hpp"
#include "rsma/cli.hpp"
#include "rsma/cus_joint_cdf.hpp"
#include "rsma/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace rsma;
namespace fs = std::filesystem;

namespace
{

// ---- pinned tolerances
constexpr double relative_tolerance = 0.05;
constexpr double probability_floor = 1e-3;
constexpr double halfwidth_multiple = 3.0;
constexpr double joint_cdf_tolerance = 0.02;
constexpr double marginal_cdf_tolerance = 0.01;
constexpr double slope_tolerance = 0.3;
constexpr double mc_slope_tolerance = 0.4;
constexpr double coincidence_tolerance = 0.02;
constexpr double identity_tolerance = 1e-9;
constexpr double jain_target = 0.99;
constexpr double preclamp_margin = 1e-3;
constexpr double fd_relative_tolerance = 1e-4;
constexpr double seconds_per_closed_form = 600.0;

// ---- pinned trial counts
constexpr std::uint64_t agreement_trials = 4000000;
constexpr std::uint64_t lemma_trials = 1000000;
constexpr std::uint64_t slope_mc_trials = 100000000;
constexpr std::uint64_t admission_trials = 1000000;
constexpr std::uint64_t fairness_trials = 1000000;
constexpr std::uint64_t dominance_trials = 1000000;
constexpr std::uint64_t identity_draws = 100000;
constexpr std::uint64_t oma_draws = 10000;
constexpr std::uint64_t seed = 20240601;

struct Check
{
    std::string name;
    bool passed;
    std::string detail;
};

struct Criterion
{
    int id;
    std::string title;
    std::vector<Check> checks;

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.passed; });
    }
};

std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

RunConfig base_config()
{
    RunConfig rc = parse_config_text("");
    rc.validation.relative_tolerance = relative_tolerance;
    rc.validation.probability_floor = probability_floor;
    rc.validation.halfwidth_multiple = halfwidth_multiple;
    rc.validation.joint_cdf_tolerance = joint_cdf_tolerance;
    rc.validation.marginal_cdf_tolerance = marginal_cdf_tolerance;
    rc.validation.slope_tolerance = slope_tolerance;
    rc.validation.mc_slope_tolerance = mc_slope_tolerance;
    rc.validation.coincidence_tolerance = coincidence_tolerance;
    rc.seed = seed;
    return rc;
}

struct Experiment
{
    RunResult result;
    double seconds = 0.0;
};

Experiment run(const RunConfig &rc, const std::string &name, std::uint64_t trials, const fs::path &out)
{
    const auto t0 = std::chrono::steady_clock::now();
    Experiment e;
    e.result = run_experiment(rc, name, {trials, seed}, (out / name).string());
    e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return e;
}

void take(Criterion &c, const Experiment &e, const std::string &prefix,
          const std::function<bool(const std::string &)> &keep = {})
{
    for (const auto &v : e.result.checks)
        if (!keep || keep(v.curve))
            c.checks.push_back({prefix + v.curve, v.passed, v.detail});
}

bool contains(const std::string &s, const std::string &part) { return s.find(part) != std::string::npos; }

std::string slurp(const fs::path &p)
{
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// ---- 5: rate-splitting identities on random effective SNRs
Criterion fpa_cpa_identities()
{
    Criterion c{5, "rate-splitting identities", {}};
    std::mt19937_64 g(seed);
    std::uniform_real_distribution<double> le(-3.0, 6.0), rate(0.1, 4.0);
    double eq_gap = 0.0, sum_gap = 0.0, cpa_gap = 0.0;
    std::uint64_t equal_branch = 0, case_three = 0, beta_bad = 0;
    for (std::uint64_t t = 0; t < identity_draws; ++t)
    {
        const double ei = std::pow(10.0, le(g)), ej = std::pow(10.0, le(g));
        const TransmissionOutcome f = fpa_decide(ei, ej);
        beta_bad += !(f.beta >= 0.0 && f.beta <= 1.0);
        const double a = std::max(ei, ej), b = std::min(ei, ej);
        if (a < b + b * b)
        {
            ++equal_branch;
            eq_gap = std::max(eq_gap, std::abs(f.rate_first - f.rate_second));
            sum_gap = std::max(sum_gap, std::abs(f.rate_first + f.rate_second - std::log2(1.0 + ei + ej)));
        }
        const double rp = rate(g);
        const double gp = target_sinr(rp);
        const TransmissionOutcome o = cpa_decide(ei, ej, {rp, 1.0});
        beta_bad += !(o.beta >= 0.0 && o.beta <= 1.0);
        if (ei >= gp && ei / (ej + 1.0) < gp)
        {
            ++case_three;
            cpa_gap = std::max(cpa_gap, std::abs(o.rate_second - (std::log2(1.0 + ei + ej) - rp)));
        }
    }
    c.checks.push_back({"fairness rule equal rates", eq_gap <= identity_tolerance && equal_branch > 0,
                        "max |R_i - R_j| " + num(eq_gap) + " over " + std::to_string(equal_branch) + " draws"});
    c.checks.push_back({"fairness rule sum capacity", sum_gap <= identity_tolerance,
                        "max |sum - log2(1 + eta_i + eta_j)| " + num(sum_gap)});
    c.checks.push_back({"beta in [0, 1]", beta_bad == 0, std::to_string(beta_bad) + " violation(s)"});
    c.checks.push_back({"cognitive splitting case rate", cpa_gap <= identity_tolerance && case_three > 0,
                        "max deviation " + num(cpa_gap) + " over " + std::to_string(case_three) + " draws"});
    return c;
}

// ---- 6 (direct part): OMA index under power scaling, index bounds
void oma_power_invariance(Criterion &c)
{
    const SystemConfig sys;
    McOptions o;
    o.trials = oma_draws;
    o.seed = seed;
    const auto gains = sample_scheduled_gains(sys, Scheme::CUS, o);
    std::uint64_t differing = 0, out_of_bounds = 0;
    for (const auto &[g1, g2] : gains)
    {
        const double ref = jain_index(oma_baseline(g1, g2, sys.rho_at(0.0)));
        for (double p = 5.0; p <= 40.0; p += 5.0)
        {
            const double rho = sys.rho_at(p);
            differing += jain_index(oma_baseline(g1, g2, rho)) != ref;
            for (const auto &out : {fpa_decide(rho * g1, rho * g2), noma_strong_first(rho * g1, rho * g2),
                                    oma_baseline(g1, g2, rho), hybrid_baseline(g1, g2, rho)})
            {
                const double J = jain_index(out);
                out_of_bounds += !(J >= 0.5 && J <= 1.0);
            }
        }
    }
    c.checks.push_back({"OMA index identical at 0..40 dBm", differing == 0,
                        std::to_string(differing) + " of " + std::to_string(gains.size() * 8) +
                            " comparisons differ"});
    c.checks.push_back({"index within [1/2, 1] for all strategies", out_of_bounds == 0,
                        std::to_string(out_of_bounds) + " violation(s)"});
}

// ---- 9 (direct part): pre-clamp range, derivatives, determinism
void hygiene(Criterion &c, const fs::path &out)
{
    const SystemConfig sys;
    const AnalyticContext ctx(sys);

    double lo = 0.0, hi = 0.0;
    std::string hi_where;
    const auto note = [&](double v, const std::string &where) {
        lo = std::min(lo, v);
        if (v > hi)
        {
            hi = v;
            hi_where = where;
        }
    };
    const std::vector<std::pair<double, double>> pairs = {{1.0, 1.0}, {1.5, 0.5}, {0.8, 0.5}, {0.5, 0.5},
                                                          {3.0, 1.0}, {2.0, 2.0}, {4.0, 1.0}};
    for (double p = -30.0; p <= 45.0; p += 2.5)
    {
        const double rho = sys.rho_at(p);
        double u = 0.0;
        for (const auto &[rp, rs] : pairs)
        {
            outage_cpa_gus(ctx, rho, rp, rs, &u);
            note(u, "greedy cognitive");
            outage_cpa_cus(ctx, rho, rp, rs, &u);
            note(u, "CDF-based cognitive");
        }
        for (double r : {0.5, 1.0, 2.0})
            for (PairMember m : {PairMember::first, PairMember::second})
            {
                outage_fpa_gus(ctx, rho, r, m, &u);
                note(u, "greedy fairness");
                outage_fpa_cus(ctx, rho, r, m, &u);
                note(u, "CDF-based fairness");
            }
    }
    const double outage_lo = lo, outage_hi = hi;
    c.checks.push_back({"closed-form outage pre-clamp range, -30..45 dBm",
                        outage_lo >= -preclamp_margin && outage_hi <= 1.0 + preclamp_margin,
                        "[" + num(outage_lo) + ", " + num(outage_hi) + "]"});

    lo = hi = 0.0;
    std::vector<double> grid;
    for (int k = 0; k <= 24; ++k)
        grid.push_back(std::pow(10.0, -14.0 + 0.5 * k));
    for (double x : grid)
    {
        note(ctx.cdf_moment(x, 1), "unordered gain CDF");
        note(marginal_cdf_first_raw(x, ctx), "first marginal");
        note(marginal_cdf_second_raw(x, ctx), "second marginal");
        for (double y : grid)
            note(joint_cdf_raw(x, y, ctx), "joint CDF");
    }
    c.checks.push_back({"gain CDF pre-clamp range, gains 1e-14..1e-2",
                        lo >= -preclamp_margin && hi <= 1.0 + preclamp_margin,
                        "[" + num(lo) + ", " + num(hi) + "], maximum in " + hi_where + "; rule weight sum " +
                            num(ctx.Psi_sum())});

    // central differences inside each region, away from the boundaries
    std::mt19937_64 g(seed);
    std::uniform_real_distribution<double> le(-12.0, -7.0);
    const double s = ctx.R_alpha() + 1.0;
    double worst = 0.0;
    int points = 0;
    while (points < 100)
    {
        const double x = std::pow(10.0, le(g)), y = std::pow(10.0, le(g));
        const double r = x / y;
        if (std::abs(std::log(r)) < 0.05 || std::abs(std::log(r / s)) < 0.05 || std::abs(std::log(r * s)) < 0.05)
            continue;
        const JointCase region = joint_case(x, y, ctx.R_alpha());
        const double hx = 1e-5 * x, hy = 1e-5 * y;
        const double fdx = (joint_cdf_case(region, x + hx, y, ctx) - joint_cdf_case(region, x - hx, y, ctx)) / (2 * hx);
        const double fdy = (joint_cdf_case(region, x, y + hy, ctx) - joint_cdf_case(region, x, y - hy, ctx)) / (2 * hy);
        const double dx = joint_cdf_dx(x, y, ctx), dy = joint_cdf_dy(x, y, ctx);
        // derivatives are compared on the scale of x dF/dx, where a relative error of the CDF is visible
        const auto rel = [](double a, double b, double scale) {
            return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-12 / scale});
        };
        worst = std::max({worst, rel(dx, fdx, x), rel(dy, fdy, y)});
        ++points;
    }
    c.checks.push_back({"joint CDF partials vs finite differences, 100 points", worst <= fd_relative_tolerance,
                        "max relative deviation " + num(worst)});

    // byte-identical output from two runs with the same seed
    RunConfig rc = base_config();
    bool identical = true;
    std::string which;
    for (const std::string name : {"fig3", "fig6a", "fig9"})
    {
        run_experiment(rc, name, {20000, seed}, (out / "det1" / name).string());
        run_experiment(rc, name, {20000, seed}, (out / "det2" / name).string());
        for (const auto &entry : fs::directory_iterator(out / "det1" / name))
        {
            const auto other = out / "det2" / name / entry.path().filename();
            if (slurp(entry.path()) != slurp(other))
            {
                identical = false;
                which += " " + entry.path().filename().string();
            }
        }
    }
    c.checks.push_back({"two runs with one seed give byte-identical files", identical,
                        identical ? "fig3, fig6a, fig9 at 20000 trials" : "differ:" + which});
}

void print(const Criterion &c)
{
    std::cout << "AC" << c.id << " " << (c.passed() ? "PASS" : "FAIL") << " " << c.title << "\n";
    for (const auto &k : c.checks)
        std::cout << "    " << (k.passed ? "ok   " : "FAIL ") << k.name << ": " << k.detail << "\n";
    std::cout.flush();
}

} // namespace

int main(int argc, char **argv)
{
    const fs::path out = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "rsma_acceptance";
    fs::remove_all(out);
    fs::create_directories(out);
    const RunConfig rc = base_config();
    std::vector<Criterion> all;
    const auto done = [&](Criterion c) {
        print(c);
        all.push_back(std::move(c));
    };

    const auto not_coincidence = [](const std::string &n) { return !contains(n, " vs 0.8/0.5 at "); };
    const Experiment fig6a = run(rc, "fig6a", agreement_trials, out);
    const Experiment fig9 = run(rc, "fig9", agreement_trials, out);
    {
        Criterion c{1, "simulation agrees with the closed forms, 10-30 dBm", {}};
        take(c, fig6a, "", not_coincidence);
        take(c, fig9, "");
        c.checks.push_back({"cognitive closed forms runtime", fig6a.seconds <= seconds_per_closed_form,
                            num(fig6a.seconds) + " s for " + std::to_string(agreement_trials) + " trials"});
        c.checks.push_back({"fairness closed forms runtime", fig9.seconds <= seconds_per_closed_form,
                            num(fig9.seconds) + " s for " + std::to_string(agreement_trials) + " trials"});
        done(std::move(c));
    }
    {
        Criterion c{2, "joint CDF of CDF-scheduled gains vs empirical", {}};
        take(c, run(rc, "lemma1", lemma_trials, out), "");
        done(std::move(c));
    }
    {
        Criterion c{3, "diversity orders, 35-45 dBm, plus swapped-role simulation", {}};
        take(c, run(rc, "slopes", slope_mc_trials, out), "");
        done(std::move(c));
    }
    {
        Criterion c{4, "secondary-target coincidence at high power", {}};
        take(c, fig6a, "", [&](const std::string &n) { return !not_coincidence(n); });
        done(std::move(c));
    }
    done(fpa_cpa_identities());
    {
        Criterion c{6, "fairness", {}};
        take(c, run(rc, "fig7", fairness_trials, out), "");
        oma_power_invariance(c);
        done(std::move(c));
    }
    {
        RunConfig arc = rc;
        arc.experiment_overrides["fig4b"]["distances"] = "100, 200, 300, 400";
        Criterion c{7, "admission at 100/200/300/400 m", {}};
        take(c, run(arc, "fig4b", admission_trials, out), "");
        done(std::move(c));
    }
    {
        Criterion c{8, "rate splitting dominates NOMA; scheme ordering", {}};
        take(c, run(rc, "fig3", dominance_trials, out), "");
        take(c, run(rc, "fig4a", dominance_trials, out), "",
             [](const std::string &n) { return !contains(n, "MC vs analytic"); });
        done(std::move(c));
    }
    {
        Criterion c{9, "numerical hygiene", {}};
        hygiene(c, out);
        done(std::move(c));
    }

    std::cout << "\n";
    int failed = 0;
    for (const auto &c : all)
    {
        std::cout << "AC" << c.id << " " << (c.passed() ? "PASS" : "FAIL") << "\n";
        failed += !c.passed();
    }
    std::cout << (failed ? std::to_string(failed) + " criterion(s) failed" : "all criteria passed") << "\n";
    return failed ? 1 : 0;
}
