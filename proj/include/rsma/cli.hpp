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


#ifndef RSMA_CLI_HPP
#define RSMA_CLI_HPP

#include "rsma/config.hpp"
#include "rsma/power_alloc.hpp"
#include "rsma/scheduling.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsma
{

// Invalid configuration file or value. The message names the line or the field.
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct ValidationSettings
{
    double relative_tolerance = 0.05;
    double probability_floor = 1e-3;
    double halfwidth_multiple = 3.0;
    double joint_cdf_tolerance = 0.02;
    double marginal_cdf_tolerance = 0.01;
    double slope_tolerance = 0.3;
    double mc_slope_tolerance = 0.4;
    double coincidence_tolerance = 0.02;
};

struct Sweep
{
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
    // start, start + step, ... up to stop (inclusive within step / 1000)
    std::vector<double> points() const;
};

// Settings of one experiment after defaults, [run], [experiment.NAME] and command-line overrides.
struct ExperimentSpec
{
    std::string name;
    std::string description;
    std::vector<Scheme> schemes;
    std::vector<Strategy> strategies;
    std::string sweep_axis; // "power_dbm" or "target_rate_primary"
    Sweep sweep;
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    std::vector<std::string> outputs; // CSV file names
    bool analytic = false;
};

struct RunConfig
{
    SystemConfig system;
    ValidationSettings validation;
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    // [experiment.NAME] key -> value
    std::map<std::string, std::map<std::string, std::string>> experiment_overrides;
};

RunConfig parse_config_text(const std::string &text);
RunConfig load_config(const std::string &path);

struct ExperimentInfo
{
    std::string name;
    std::string description;
};

// Stable order.
std::vector<ExperimentInfo> list_experiments();

struct RunOverrides
{
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> seed;
};

ExperimentSpec resolve_experiment(const RunConfig &cfg, const std::string &name, const RunOverrides &ov);

struct ValidationLine
{
    std::string curve;
    bool passed = true;
    std::string detail;
};

struct RunResult
{
    int exit_code = 0;
    std::vector<std::string> files;
    std::vector<ValidationLine> checks;
};

// Runs one experiment, writing its CSV files and report.txt into out_dir.
RunResult run_experiment(const RunConfig &cfg, const std::string &name, const RunOverrides &ov,
                         const std::string &out_dir);

// RFC 4180 CSV: header first, CRLF line ends, fields quoted when needed.
class CsvTable
{
  public:
    explicit CsvTable(std::vector<std::string> header);
    void add(std::vector<std::string> row);
    std::string str() const;
    void write(const std::string &path) const;
    std::size_t rows() const { return rows_.size(); }

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

// Ten significant digits; empty for NaN.
std::string format_number(double v);

// Command-line entry point shared by the executable and tests.
int cli_main(int argc, char **argv);

} // namespace rsma

#endif
