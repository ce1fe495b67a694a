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

#include <cmath>
#include <limits>
#include <map>

#include "symprot/experiments.hpp"
#include "symprot/parallel.hpp"
#include "symprot/rng.hpp"

namespace symprot {

const char *to_string(MblScheme s) {
    return s == MblScheme::raw ? "raw" : "sp";
}

MinStepsResult min_trotter_steps(const HamiltonianModel &model, MblScheme scheme, double t, double epsilon,
                                 std::uint64_t seed, std::size_t r_max) {
    require(epsilon > 0.0, "target error must be positive");
    require(t > 0.0, "evolution time must be positive");
    require(r_max >= 1, "r_max must be >= 1");
    const DenseStepper stepper(model);
    const int n = static_cast<int>(model.meta().n);
    std::map<std::size_t, bool> cache;
    MinStepsResult res;
    auto passes = [&](std::size_t r) {
        if (auto it = cache.find(r); it != cache.end()) {
            return it->second;
        }
        EvolutionPlan plan;
        plan.algorithm = Algorithm::pf1;
        plan.r = r;
        plan.dt = t / static_cast<double>(r);
        plan.schedule = scheme == MblScheme::raw
                            ? ProtectionSchedule::identity(r)
                            : ProtectionSchedule::u1_z(n, r, derive_seed(seed, "sp", r), ScheduleMode::independent);
        const bool ok = protected_run_dense(stepper, plan).error <= epsilon;
        ++res.evaluations;
        cache.emplace(r, ok);
        return ok;
    };

    std::size_t lo = 0;  // largest known failing r (0: none)
    std::size_t hi = 1;
    while (!passes(hi)) {
        lo = hi;
        if (hi >= r_max) {
            res.reachable = false;
            return res;
        }
        hi = std::min(hi * 2, r_max);
    }
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (passes(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    res.r = hi;
    res.monotone_ok = hi == 1 || !passes(hi - 1);
    return res;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void store(RunSeries &s, std::size_t rep, std::size_t i, const MinStepsResult &res) {
    s.reps[rep][i] = res.reachable ? static_cast<double>(res.r) : kNaN;
    if (!res.reachable) {
        s.flags[rep][i] = "unreachable";
    } else if (!res.monotone_ok) {
        s.flags[rep][i] = "nonmonotone";
    }
}

void fill_ratio(RunSeries &ratio, const RunSeries &raw, const RunSeries &sp) {
    for (std::size_t rep = 0; rep < ratio.reps.size(); ++rep) {
        for (std::size_t i = 0; i < ratio.x.size(); ++i) {
            ratio.reps[rep][i] = sp.reps[rep][i] / raw.reps[rep][i];
        }
    }
    ratio.resummarize();
}

void check_common(double t_per_site, double epsilon, std::size_t reps) {
    require(t_per_site > 0.0, "t_per_site must be positive");
    require(epsilon > 0.0, "epsilon must be positive");
    require(reps >= 1, "repetitions must be >= 1");
}

}  // namespace

std::vector<RunSeries> exp_min_trotter_steps(const MinStepsConfig &config) {
    check_common(config.t_per_site, config.epsilon, config.repetitions);
    require(!config.n_list.empty(), "n_list is empty");
    std::vector<double> xs;
    for (int n : config.n_list) {
        require(n >= 2 && n <= 10, "MBL chain length must be in [2, 10]");
        xs.push_back(n);
    }
    RunSeries raw("raw", "n", xs, config.repetitions);
    RunSeries sp("sp", "n", xs, config.repetitions);
    RunSeries ratio("ratio_sp_raw", "n", xs, config.repetitions);
    parallel_for(config.repetitions, config.threads, [&](std::size_t rep) {
        const std::uint64_t seed = rep_seed(config.seed, "mbl", rep);
        for (std::size_t i = 0; i < config.n_list.size(); ++i) {
            const int n = config.n_list[i];
            const double t = config.t_per_site * n;
            const auto model = build_mbl_heisenberg(n, config.h, derive_seed(seed, "model", n));
            const auto sched_seed = derive_seed(seed, "schedule", n);
            store(raw, rep, i, min_trotter_steps(model, MblScheme::raw, t, config.epsilon, sched_seed, config.r_max));
            store(sp, rep, i, min_trotter_steps(model, MblScheme::sp, t, config.epsilon, sched_seed, config.r_max));
        }
    });
    raw.resummarize();
    sp.resummarize();
    fill_ratio(ratio, raw, sp);
    return {raw, sp, ratio};
}

std::vector<RunSeries> exp_disorder_sweep(const DisorderSweepConfig &config) {
    check_common(config.t_per_site, config.epsilon, config.repetitions);
    require(config.n >= 2 && config.n <= 10, "MBL chain length must be in [2, 10]");
    require(!config.h_list.empty(), "h_list is empty");
    for (double h : config.h_list) {
        require(h >= 0.0, "disorder strengths must be >= 0");
    }
    RunSeries raw("raw", "h", config.h_list, config.repetitions);
    RunSeries sp("sp", "h", config.h_list, config.repetitions);
    RunSeries ratio("ratio_sp_raw", "h", config.h_list, config.repetitions);
    const double t = config.t_per_site * config.n;
    parallel_for(config.repetitions, config.threads, [&](std::size_t rep) {
        const std::uint64_t seed = rep_seed(config.seed, "mbl", rep);
        const auto sched_seed = derive_seed(seed, "schedule", config.n);
        for (std::size_t i = 0; i < config.h_list.size(); ++i) {
            const auto model = build_mbl_heisenberg(config.n, config.h_list[i], derive_seed(seed, "model", config.n));
            store(raw, rep, i, min_trotter_steps(model, MblScheme::raw, t, config.epsilon, sched_seed, config.r_max));
            store(sp, rep, i, min_trotter_steps(model, MblScheme::sp, t, config.epsilon, sched_seed, config.r_max));
        }
    });
    raw.resummarize();
    sp.resummarize();
    fill_ratio(ratio, raw, sp);
    return {raw, sp, ratio};
}

}  // namespace symprot
