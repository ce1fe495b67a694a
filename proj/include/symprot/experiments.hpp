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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "symprot/evolve.hpp"

namespace symprot {

// ---- statistics ----

struct Summary {
    double median = 0.0;
    double q25 = 0.0;
    double q75 = 0.0;
};

/// Linear interpolation between order statistics; q in [0, 1]. NaN entries are ignored.
double percentile(std::vector<double> values, double q);
Summary summarize(const std::vector<double> &values);

struct PowerLawFit {
    double slope = 0.0;
    double intercept = 0.0;  // natural log of the prefactor
    double residual = 0.0;   // RMS deviation in natural-log units
    double x_lo = 0.0;
    double x_hi = 0.0;
    std::size_t points = 0;
};

/// Least squares on (ln x, ln y) for points with x in [x_lo, x_hi]. Needs >= 4 points and y > 0.
PowerLawFit fit_power_law(const std::vector<double> &x, const std::vector<double> &y,
                          std::optional<std::pair<double, double>> range = std::nullopt);

/// One curve: value per (x point, repetition) plus its pointwise summary.
struct RunSeries {
    std::string name;
    std::string x_label;
    std::vector<double> x;
    std::vector<std::vector<double>> reps;        // reps[rep][point]
    std::vector<std::vector<std::string>> flags;  // same shape as reps, "" when clean
    std::vector<double> median, q25, q75;
    std::optional<PowerLawFit> fit;

    RunSeries() = default;
    RunSeries(std::string name, std::string x_label, std::vector<double> x, std::size_t repetitions);

    std::size_t num_reps() const { return reps.size(); }
    /// Recomputes median/q25/q75 from reps.
    void resummarize();
    /// Fits the median series.
    void fit_median(std::optional<std::pair<double, double>> range = std::nullopt);
    nlohmann::json summary_json() const;
};

/// Seed of repetition `rep` of experiment `experiment_id`.
std::uint64_t rep_seed(std::uint64_t master, const std::string &experiment_id, std::size_t rep);

// ---- Heisenberg error versus r ----

enum class HeisenbergScheme { raw, sp_rand, sp_det, random_ordering };
const char *to_string(HeisenbergScheme s);
HeisenbergScheme parse_heisenberg_scheme(const std::string &s);

struct ErrorVsRConfig {
    int n = 4;
    double t = 1.0;
    std::vector<std::size_t> r_list = {4, 8, 16, 32, 64, 128, 256, 512};
    std::vector<HeisenbergScheme> schemes = {HeisenbergScheme::raw, HeisenbergScheme::sp_rand,
                                             HeisenbergScheme::sp_det, HeisenbergScheme::random_ordering};
    std::size_t repetitions = 25;
    std::uint64_t seed = 1;
    std::size_t threads = 0;
    /// Cross-check each conjugation-schedule point against the general bound.
    bool check_bounds = false;
};

std::vector<RunSeries> exp_error_vs_r(const ErrorVsRConfig &config);

// ---- minimal Trotter number for the MBL chain ----

enum class MblScheme { raw, sp };
const char *to_string(MblScheme s);

struct MinStepsConfig {
    std::vector<int> n_list = {6};
    double h = 2.0;
    double t_per_site = 1.0;  // t = t_per_site * n
    double epsilon = 0.01;
    std::size_t repetitions = 25;
    std::uint64_t seed = 1;
    std::size_t threads = 0;
    std::size_t r_max = std::size_t{1} << 20;
};

struct MinStepsResult {
    std::size_t r = 0;  // 0 when unreachable
    bool reachable = true;
    bool monotone_ok = true;  // predicate fails at r - 1
    std::size_t evaluations = 0;
};

/// Smallest r with error(r) <= epsilon by doubling then bisection; the schedule of a probed r
/// depends only on (seed, r).
MinStepsResult min_trotter_steps(const HamiltonianModel &model, MblScheme scheme, double t, double epsilon,
                                 std::uint64_t seed, std::size_t r_max = std::size_t{1} << 20);

/// Series per scheme, x = n.
std::vector<RunSeries> exp_min_trotter_steps(const MinStepsConfig &config);

struct DisorderSweepConfig {
    int n = 6;
    std::vector<double> h_list = {0.5, 1.0, 2.0, 4.0, 8.0};
    double t_per_site = 1.0;
    double epsilon = 0.01;
    std::size_t repetitions = 25;
    std::uint64_t seed = 1;
    std::size_t threads = 0;
    std::size_t r_max = std::size_t{1} << 20;
};

/// Series per scheme, x = h.
std::vector<RunSeries> exp_disorder_sweep(const DisorderSweepConfig &config);

// ---- Schwinger leakage ----

enum class GaugeScheme { raw, uniform_z2l, uniform_u1, random_z2l, random_u1 };
const char *to_string(GaugeScheme s);
GaugeScheme parse_gauge_scheme(const std::string &s);

struct SchwingerConfig {
    int n = 4;
    int cutoff = 4;
    double x = 0.6;
    double mu = 0.1;
    double dt = 0.01;
    std::size_t steps = 1000;
    std::size_t record_every = 10;
    std::vector<Algorithm> algorithms = {Algorithm::pf1};
    std::vector<GaugeScheme> schemes = {GaugeScheme::raw, GaugeScheme::uniform_z2l, GaugeScheme::uniform_u1,
                                        GaugeScheme::random_z2l, GaugeScheme::random_u1};
    std::size_t repetitions = 25;
    std::uint64_t seed = 1;
    std::size_t threads = 0;
};

/// Series per (algorithm, scheme), named "<alg>_<scheme>", x = step index.
std::vector<RunSeries> exp_schwinger_leakage(const SchwingerConfig &config);

/// Protection schedule of a gauge scheme (identity for raw).
ProtectionSchedule gauge_schedule(const HamiltonianModel &model, GaugeScheme scheme, std::size_t steps,
                                  std::uint64_t seed);

// ---- correlated noise ----

struct NoiseConfig {
    int n = 4;
    int cutoff = 4;
    double x = 0.6;
    double mu = 0.1;
    double dt = 0.01;
    std::size_t steps = 300;
    std::size_t record_every = 10;
    Algorithm algorithm = Algorithm::pf4;
    double eta = 0.01;
    std::vector<std::size_t> lambda_list = {1, 2, 4, 8};
    bool per_qubit_axes = false;
    NoisePlacement placement = NoisePlacement::inside_protection;
    std::size_t repetitions = 25;
    std::uint64_t seed = 1;
    std::size_t threads = 0;
};

struct NoiseSweepResult {
    std::vector<RunSeries> series;  // "raw_lambda<k>" and "sp_lambda<k>", x = step index
    RunSeries final_ratio;          // x = lambda, value = SP / raw final leakage per repetition
};

NoiseSweepResult exp_noise_correlation(const NoiseConfig &config);

// ---- output ----

/// Formats with 17 significant digits.
std::string format_double(double v);

/// CSV with header x,rep_id,value,flags; per-rep rows then median/q25/q75 rows.
std::string series_csv(const RunSeries &series);
/// Writes via a temporary file and rename.
void write_file_atomic(const std::string &path, const std::string &contents);

}  // namespace symprot
