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


#include "rsma/cli.hpp"

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rsma;
namespace fs = std::filesystem;

namespace
{
std::string slurp(const fs::path &p)
{
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string &name)
{
    const fs::path dir = fs::temp_directory_path() / ("rsma_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string config_error(const std::string &text)
{
    try
    {
        parse_config_text(text);
    }
    catch (const ConfigError &e)
    {
        return e.what();
    }
    return "";
}

int call(std::vector<std::string> args)
{
    args.insert(args.begin(), "rsma_uplink");
    std::vector<char *> argv;
    for (auto &a : args)
        argv.push_back(a.data());
    return cli_main(int(argv.size()), argv.data());
}

// fig3 over three points with a few thousand trials: small enough for a unit test
const char *small_fig3 = "[experiment.fig3]\nsweep_start = 0\nsweep_stop = 10\nsweep_step = 5\n";
} // namespace

TEST_CASE("number formatting")
{
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(1.0 / 3.0) == "0.3333333333");
    CHECK(format_number(1e-12) == "1e-12");
    CHECK(format_number(std::nan("")) == "");
}

TEST_CASE("CSV output is RFC 4180")
{
    CsvTable t({"a", "b"});
    t.add({"plain", "with,comma"});
    t.add({"with \"quote\"", "line\nbreak"});
    CHECK(t.rows() == 2);
    CHECK(t.str() == "a,b\r\nplain,\"with,comma\"\r\n\"with \"\"quote\"\"\",\"line\nbreak\"\r\n");
    CHECK_THROWS_AS(t.add({"only one"}), std::logic_error);
}

TEST_CASE("sweep points")
{
    CHECK(Sweep{10, 30, 5}.points() == std::vector<double>{10, 15, 20, 25, 30});
    CHECK(Sweep{0.5, 4, 0.5}.points().size() == 8);
    CHECK(Sweep{35, 45, 2.5}.points().back() == 45.0);
    CHECK(Sweep{3, 3, 1}.points() == std::vector<double>{3});
    CHECK_THROWS(Sweep{0, 10, 0}.points());
    CHECK_THROWS(Sweep{10, 0, 1}.points());
}

TEST_CASE("configuration parsing")
{
    const RunConfig d = parse_config_text("");
    CHECK(d.system.K == 4);
    CHECK(d.system.radius_m == 500.0);
    CHECK(d.system.alpha == 3.76);
    CHECK(d.system.noise_power_dbm == -100.0);
    CHECK(d.system.orders.L == 10);
    CHECK(d.trials == 1000000);
    CHECK(d.validation.relative_tolerance == 0.05);
    CHECK(d.validation.probability_floor == 1e-3);

    const RunConfig c = parse_config_text("# comment\n[system]\nusers = 6\nradius_m = 800\n"
                                          "[quadrature]\nL = 20\n[targets]\nprimary = 1.5\n"
                                          "[run]\ntrials = 5000\nseed = 9\n"
                                          "[validation]\nrelative_tolerance = 0.1\n"
                                          "[experiment.fig6a]\ntrials = 77\n");
    CHECK(c.system.K == 6);
    CHECK(c.system.radius_m == 800.0);
    CHECK(c.system.orders.L == 20);
    CHECK(c.system.targets.primary == 1.5);
    CHECK(c.trials == 5000);
    CHECK(c.seed == 9);
    CHECK(c.validation.relative_tolerance == 0.1);
    CHECK(c.experiment_overrides.at("fig6a").at("trials") == "77");
    CHECK(resolve_experiment(c, "fig6a", {}).trials == 77);
    CHECK(resolve_experiment(c, "fig6a", {1000, 3}).trials == 1000);
    CHECK(resolve_experiment(c, "fig6a", {1000, 3}).seed == 3);
    CHECK(resolve_experiment(c, "fig7", {}).trials == 5000);
}

TEST_CASE("configuration errors name the line or field")
{
    CHECK_THAT(config_error("[system]\nradius_m = abc\n"), Catch::Matchers::ContainsSubstring("system.radius_m"));
    CHECK_THAT(config_error("[system]\nusers = 1\n"), Catch::Matchers::ContainsSubstring("users"));
    CHECK_THAT(config_error("[system]\nradius = 5\n"), Catch::Matchers::ContainsSubstring("system.radius"));
    CHECK_THAT(config_error("[nonsense]\nx = 1\n"), Catch::Matchers::ContainsSubstring("nonsense"));
    CHECK_THAT(config_error("[experiment.fig99]\ntrials = 1\n"), Catch::Matchers::ContainsSubstring("fig99"));
    CHECK_THAT(config_error("[system\nusers = 4\n"), Catch::Matchers::ContainsSubstring("line 1"));
    CHECK_THAT(config_error("[system]\nusers = 4\nthis line has no equals\n"),
               Catch::Matchers::ContainsSubstring("line 3"));
    CHECK_THAT(config_error("[quadrature]\nM = 0\n"), Catch::Matchers::ContainsSubstring("M"));
    CHECK_THROWS_AS(load_config("/nonexistent/rsma.ini"), ConfigError);
}

TEST_CASE("shipped default configuration loads")
{
    const char *path = std::getenv("RSMA_CONFIG");
    if (!path)
        SKIP("RSMA_CONFIG not set");
    const RunConfig c = load_config(path);
    CHECK(c.system.K == 4);
    for (const auto &e : list_experiments())
        CHECK_NOTHROW(resolve_experiment(c, e.name, {}));
}

TEST_CASE("experiment list")
{
    const auto a = list_experiments();
    const std::vector<std::string> expected{"fig3",  "fig4a", "fig4b", "fig5",   "fig6a", "fig6b",
                                            "fig7",  "fig8",  "fig9",  "lemma1", "slopes"};
    REQUIRE(a.size() == expected.size());
    for (std::size_t k = 0; k < a.size(); ++k)
    {
        CHECK(a[k].name == expected[k]);
        CHECK_FALSE(a[k].description.empty());
    }
    CHECK(a[6].description == "Jain-index vs power, 4 strategies");
    const auto b = list_experiments();
    for (std::size_t k = 0; k < a.size(); ++k)
        CHECK(a[k].name == b[k].name);
    const RunConfig c = parse_config_text("");
    for (const auto &e : a)
        CHECK(resolve_experiment(c, e.name, {}).name == e.name);
}

TEST_CASE("unknown experiment lists the available names")
{
    const RunConfig c = parse_config_text("");
    try
    {
        resolve_experiment(c, "fig10", {});
        FAIL("no exception");
    }
    catch (const std::invalid_argument &e)
    {
        const std::string msg = e.what();
        CHECK_THAT(msg, Catch::Matchers::ContainsSubstring("fig10"));
        for (const auto &x : list_experiments())
            CHECK_THAT(msg, Catch::Matchers::ContainsSubstring(x.name));
    }
}

TEST_CASE("running an experiment writes CSVs and a report")
{
    const RunConfig c = parse_config_text(small_fig3);
    const fs::path dir = scratch("run");
    const RunResult r = run_experiment(c, "fig3", {4000, 5}, (dir / "a").string());
    CHECK(r.exit_code == 0);
    REQUIRE(r.files.size() == 2);
    const std::string csv = slurp(dir / "a" / "fig3_ergodic_rate.csv");
    CHECK(csv.rfind("scheme,strategy,power_dbm,rate_mean,ci_halfwidth,trials,seed\r\n", 0) == 0);
    CHECK(csv.find(",4000,5\r\n") != std::string::npos);
    // 3 schemes x 2 strategies x 3 points, plus the header
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 19);
    const std::string report = slurp(dir / "a" / "report.txt");
    CHECK_THAT(report, Catch::Matchers::ContainsSubstring("result: PASS"));
    CHECK_THAT(report, Catch::Matchers::ContainsSubstring("trials: 4000"));

    // same seed: byte-identical; different seed: different numbers
    run_experiment(c, "fig3", {4000, 5}, (dir / "b").string());
    CHECK(slurp(dir / "b" / "fig3_ergodic_rate.csv") == csv);
    CHECK(slurp(dir / "b" / "report.txt") == report);
    run_experiment(c, "fig3", {4000, 6}, (dir / "c").string());
    CHECK(slurp(dir / "c" / "fig3_ergodic_rate.csv") != csv);
}

TEST_CASE("trial override widens the intervals")
{
    const RunConfig c = parse_config_text("");
    const fs::path dir = scratch("override");
    run_experiment(c, "fig4b", {1000, 1}, (dir / "small").string());
    run_experiment(c, "fig4b", {100000, 1}, (dir / "large").string());
    const std::string small = slurp(dir / "small" / "fig4b_admission.csv");
    const std::string large = slurp(dir / "large" / "fig4b_admission.csv");
    CHECK(small.find(",1000,") != std::string::npos);
    CHECK(large.find(",100000,") != std::string::npos);
    // the half-width column of the first data row
    const auto field = [](const std::string &csv, const std::string &column) {
        std::istringstream in(csv);
        std::string header, row;
        std::getline(in, header);
        std::getline(in, row);
        std::vector<std::string> h, v;
        std::string cell;
        for (std::istringstream hs(header); std::getline(hs, cell, ',');)
            h.push_back(cell);
        for (std::istringstream rs(row); std::getline(rs, cell, ',');)
            v.push_back(cell);
        const auto i = std::size_t(std::find(h.begin(), h.end(), column) - h.begin());
        return std::stod(v.at(i));
    };
    CHECK(field(small, "ci_halfwidth") > 5.0 * field(large, "ci_halfwidth"));
}

TEST_CASE("command-line exit codes")
{
    const fs::path dir = scratch("main");
    const std::string cfg = (dir / "small.ini").string();
    std::ofstream(cfg) << small_fig3;
    CHECK(call({"list"}) == 0);
    CHECK(call({"run", "--config", cfg, "--experiment", "fig3", "--trials", "4000", "--out",
                (dir / "ok").string()}) == 0);
    CHECK(fs::exists(dir / "ok" / "report.txt"));
    // 200 trials cannot resolve admission to 0.005
    CHECK(call({"run", "--config", cfg, "--experiment", "fig4b", "--trials", "200", "--out",
                (dir / "fail").string()}) == 1);
    CHECK(call({"run", "--config", cfg, "--experiment", "fig99", "--out", (dir / "x").string()}) == 2);
    CHECK(call({"run", "--config", (dir / "missing.ini").string(), "--experiment", "fig3"}) == 2);
    CHECK(call({"run", "--experiment", "fig3"}) == 2);
    CHECK(call({"run", "--config", cfg, "--experiment", "fig3", "--trials", "0"}) == 2);
    CHECK(call({}) == 2);
}
