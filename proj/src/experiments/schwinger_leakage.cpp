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

#include "symprot/experiments.hpp"
#include "symprot/parallel.hpp"
#include "symprot/rng.hpp"

namespace symprot {

const char *to_string(GaugeScheme s) {
    switch (s) {
        case GaugeScheme::raw: return "raw";
        case GaugeScheme::uniform_z2l: return "uniform_z2l";
        case GaugeScheme::uniform_u1: return "uniform_u1";
        case GaugeScheme::random_z2l: return "random_z2l";
        case GaugeScheme::random_u1: return "random_u1";
    }
    return "?";
}

GaugeScheme parse_gauge_scheme(const std::string &s) {
    for (auto v : {GaugeScheme::raw, GaugeScheme::uniform_z2l, GaugeScheme::uniform_u1, GaugeScheme::random_z2l,
                   GaugeScheme::random_u1}) {
        if (s == to_string(v)) {
            return v;
        }
    }
    throw DomainError("unknown gauge scheme '" + s + "'");
}

ProtectionSchedule gauge_schedule(const HamiltonianModel &model, GaugeScheme scheme, std::size_t steps,
                                  std::uint64_t seed) {
    switch (scheme) {
        case GaugeScheme::raw: return ProtectionSchedule::identity(steps);
        case GaugeScheme::uniform_z2l:
            return ProtectionSchedule::gauge(model, steps, SymmetryGroup::z2l_gauge, ScheduleMode::uniform_angles, seed);
        case GaugeScheme::uniform_u1:
            return ProtectionSchedule::gauge(model, steps, SymmetryGroup::u1_gauge, ScheduleMode::uniform_angles, seed);
        case GaugeScheme::random_z2l:
            return ProtectionSchedule::gauge(model, steps, SymmetryGroup::z2l_gauge, ScheduleMode::independent, seed);
        case GaugeScheme::random_u1:
            return ProtectionSchedule::gauge(model, steps, SymmetryGroup::u1_gauge, ScheduleMode::independent, seed);
    }
    throw DomainError("unknown gauge scheme");
}

namespace {

std::vector<double> record_points(std::size_t steps, std::size_t every) {
    require(every >= 1, "record_every must be >= 1");
    std::vector<double> xs;
    for (std::size_t k = 0; k < steps; k += every) {
        xs.push_back(static_cast<double>(k));
    }
    xs.push_back(static_cast<double>(steps));
    return xs;
}

void copy_recorded(const std::vector<double> &leak, const std::vector<double> &xs, std::vector<double> &dst) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        dst[i] = leak.at(static_cast<std::size_t>(xs[i]));
    }
}

struct SchwingerSetup {
    HamiltonianModel model;
    PhysicalSubspace phys;
    StateVec initial;
};

SchwingerSetup make_setup(int n, int cutoff, double x, double mu) {
    HamiltonianModel model = build_schwinger(n, cutoff, x, mu);
    PhysicalSubspace phys = physical_projector(model);
    StateVec initial = ground_state_physical(model).state;
    return {std::move(model), std::move(phys), std::move(initial)};
}

std::vector<double> run_leakage(const SchwingerSetup &setup, Algorithm alg, double dt, std::size_t steps,
                                ProtectionSchedule schedule, std::optional<NoiseSpec> noise) {
    StatevecStepper stepper(setup.model);
    EvolutionPlan plan;
    plan.algorithm = alg;
    plan.dt = dt;
    plan.r = steps;
    plan.schedule = std::move(schedule);
    plan.backend = Backend::statevec;
    plan.noise = noise;
    return protected_run_statevec(stepper, plan, setup.initial, &setup.phys).leakage;
}

}  // namespace

std::vector<RunSeries> exp_schwinger_leakage(const SchwingerConfig &config) {
    require(config.dt > 0.0, "dt must be positive");
    require(config.steps >= 1, "steps must be >= 1");
    require(config.repetitions >= 1, "repetitions must be >= 1");
    const SchwingerSetup setup = make_setup(config.n, config.cutoff, config.x, config.mu);
    const std::vector<double> xs = record_points(config.steps, config.record_every);

    std::vector<RunSeries> out;
    for (Algorithm alg : config.algorithms) {
        for (GaugeScheme scheme : config.schemes) {
            RunSeries s(std::string(to_string(alg)) + "_" + to_string(scheme), "step", xs, config.repetitions);
            if (scheme == GaugeScheme::raw) {
                // No randomness: one run shared by every repetition.
                const auto leak = run_leakage(setup, alg, config.dt, config.steps,
                                              ProtectionSchedule::identity(config.steps), std::nullopt);
                for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
                    copy_recorded(leak, xs, s.reps[rep]);
                }
            } else {
                parallel_for(config.repetitions, config.threads, [&](std::size_t rep) {
                    const std::uint64_t seed = rep_seed(config.seed, "schwinger-leakage", rep);
                    const auto sched =
                        gauge_schedule(setup.model, scheme, config.steps, derive_seed(seed, to_string(scheme)));
                    const auto leak = run_leakage(setup, alg, config.dt, config.steps, sched, std::nullopt);
                    copy_recorded(leak, xs, s.reps[rep]);
                });
            }
            s.resummarize();
            out.push_back(std::move(s));
        }
    }
    return out;
}

NoiseSweepResult exp_noise_correlation(const NoiseConfig &config) {
    require(config.dt > 0.0, "dt must be positive");
    require(config.steps >= 1, "steps must be >= 1");
    require(config.eta >= 0.0, "eta must be >= 0");
    require(config.repetitions >= 1, "repetitions must be >= 1");
    require(!config.lambda_list.empty(), "lambda_list is empty");
    const SchwingerSetup setup = make_setup(config.n, config.cutoff, config.x, config.mu);
    const std::vector<double> xs = record_points(config.steps, config.record_every);

    std::vector<double> lambdas;
    for (std::size_t l : config.lambda_list) {
        require(l >= 1, "lambda values must be >= 1");
        lambdas.push_back(static_cast<double>(l));
    }
    NoiseSweepResult res;
    res.final_ratio = RunSeries("final_ratio_sp_raw", "lambda", lambdas, config.repetitions);
    for (std::size_t li = 0; li < config.lambda_list.size(); ++li) {
        const std::size_t lambda = config.lambda_list[li];
        const std::string suffix = "_lambda" + std::to_string(lambda);
        RunSeries raw("raw" + suffix, "step", xs, config.repetitions);
        RunSeries sp("sp" + suffix, "step", xs, config.repetitions);
        parallel_for(config.repetitions, config.threads, [&](std::size_t rep) {
            const std::uint64_t seed = rep_seed(config.seed, "noise-sweep", rep);
            NoiseSpec noise;
            noise.eta = config.eta;
            noise.lambda = lambda;
            noise.seed = derive_seed(seed, "noise", lambda);
            noise.per_qubit_axes = config.per_qubit_axes;
            noise.placement = config.placement;
            const auto leak_raw = run_leakage(setup, config.algorithm, config.dt, config.steps,
                                              ProtectionSchedule::identity(config.steps), noise);
            const auto sched =
                gauge_schedule(setup.model, GaugeScheme::uniform_u1, config.steps, derive_seed(seed, "schedule"));
            const auto leak_sp = run_leakage(setup, config.algorithm, config.dt, config.steps, sched, noise);
            copy_recorded(leak_raw, xs, raw.reps[rep]);
            copy_recorded(leak_sp, xs, sp.reps[rep]);
            res.final_ratio.reps[rep][li] = leak_sp.back() / leak_raw.back();
        });
        raw.resummarize();
        sp.resummarize();
        res.series.push_back(std::move(raw));
        res.series.push_back(std::move(sp));
    }
    res.final_ratio.resummarize();
    return res;
}

}  // namespace symprot
