// Copyright 2026 The Symprot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "symprot/experiments.hpp"

namespace symprot {

/// Every setting of a run. Sections and keys mirror the config file:
///
///   [experiment] id seed repetitions out_dir svg threads
///   [model]      kind n h cutoff x mu
///   [plan]       algorithms t dt steps r r_list record_every
///   [schedule]   schemes check_bounds
///   [search]     epsilon n_list h_list t_per_site r_max
///   [noise]      eta lambda_list per_qubit_axes placement
///   [bounds]     schedule kind log_base measure
///   [zeno]       m g_norm dim
struct ExperimentConfig {
    // [experiment]
    std::string id;
    std::uint64_t seed = 1;
    std::size_t repetitions = 25;
    std::string out_dir = "out";
    bool svg = false;
    std::size_t threads = 0;
    // [model]
    std::string model_kind = "random_heisenberg";  // random_heisenberg | mbl | schwinger
    int n = 4;
    double h = 2.0;
    int cutoff = 4;
    double x = 0.6;
    double mu = 0.1;
    // [plan]
    std::vector<std::string> algorithms = {"pf1"};
    double t = 1.0;
    double dt = 0.01;
    std::size_t steps = 1000;
    std::size_t r = 256;
    std::vector<std::size_t> r_list;  // empty: experiment default
    std::size_t record_every = 10;
    // [schedule]
    std::vector<std::string> schemes;  // empty: experiment default
    bool check_bounds = false;
    // [search]
    double epsilon = 0.01;
    std::vector<int> n_list = {6};
    std::vector<double> h_list = {0.5, 1.0, 2.0, 4.0, 8.0};
    double t_per_site = 1.0;
    std::size_t r_max = std::size_t{1} << 20;
    // [noise]
    double eta = 0.01;
    std::vector<std::size_t> lambda_list = {1, 2, 4, 8};
    bool per_qubit_axes = false;
    std::string placement = "inside_protection";  // inside_protection | after_step
    // [bounds]
    std::string bounds_schedule = "auto";  // auto | identity | haar_su2 | hadamard_det | u1_z | gauge_u1 | gauge_z2l
    std::string bounds_kind = "auto";      // auto | theorem1 | appendix_c
    std::string log_base = "log2";         // log2 | ln
    bool measure = true;
    // [zeno]
    std::size_t zeno_m = 2;
    double g_norm = 1.0;
    std::size_t zeno_dim = 4;

    bool operator==(const ExperimentConfig &) const = default;
};

struct ConfigParse {
    ExperimentConfig config;
    std::vector<std::string> errors;
    std::set<std::string> present;  // "section.key" seen in the text
};

/// Keys that must appear in a config file.
const std::vector<std::string> &required_config_keys();

/// Parses key = value lines grouped in [section]s; '#' and ';' start comments.
/// Collects every error. Missing required keys are reported when `require_keys`.
ConfigParse parse_config_text(const std::string &text, bool require_keys = true);
/// Throws ConfigError listing every problem.
ExperimentConfig parse_config(const std::string &text);
/// Canonical text; parse_config(config_to_text(c)) == c.
std::string config_to_text(const ExperimentConfig &config);
nlohmann::json config_to_json(const ExperimentConfig &config);

/// Sets one "section.key" from text; returns an error message or "".
std::string set_config_value(ExperimentConfig &config, const std::string &dotted_key, const std::string &value);

/// Checks cross-field constraints (known names, positive sizes). Returns every error.
std::vector<std::string> validate_config(const ExperimentConfig &config);

// ---- SVG ----

struct AxesSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = true;
    bool log_y = true;
};

/// Self-contained SVG: median polyline per series, quartile band when a series has >= 4 repetitions.
std::string svg_string(const std::vector<RunSeries> &series, const AxesSpec &axes);
void emit_svg(const std::vector<RunSeries> &series, const AxesSpec &axes, const std::string &path);

// ---- entry point ----

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitConfig = 2, kExitNumerical = 3 };

/// Parses argv and runs one subcommand. Output and diagnostics go to the given streams.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace symprot
