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

#include "symprot/bounds.hpp"
#include "symprot/experiments.hpp"
#include "symprot/parallel.hpp"
#include "symprot/rng.hpp"

namespace symprot {

const char *to_string(HeisenbergScheme s) {
    switch (s) {
        case HeisenbergScheme::raw: return "raw";
        case HeisenbergScheme::sp_rand: return "sp_rand";
        case HeisenbergScheme::sp_det: return "sp_det";
        case HeisenbergScheme::random_ordering: return "random_ordering";
    }
    return "?";
}

HeisenbergScheme parse_heisenberg_scheme(const std::string &s) {
    for (auto v : {HeisenbergScheme::raw, HeisenbergScheme::sp_rand, HeisenbergScheme::sp_det,
                   HeisenbergScheme::random_ordering}) {
        if (s == to_string(v)) {
            return v;
        }
    }
    throw DomainError("unknown Heisenberg scheme '" + s + "'");
}

namespace {

ProtectionSchedule heisenberg_schedule(HeisenbergScheme scheme, int n, std::size_t r, std::size_t num_terms,
                                       std::uint64_t seed) {
    switch (scheme) {
        case HeisenbergScheme::raw: return ProtectionSchedule::identity(r);
        case HeisenbergScheme::sp_rand: return ProtectionSchedule::haar_su2(n, r, derive_seed(seed, "haar", r));
        case HeisenbergScheme::sp_det: return ProtectionSchedule::hadamard_det(n, r);
        case HeisenbergScheme::random_ordering:
            return ProtectionSchedule::random_ordering(num_terms, r, derive_seed(seed, "ordering", r));
    }
    throw DomainError("unknown Heisenberg scheme");
}

}  // namespace

std::vector<RunSeries> exp_error_vs_r(const ErrorVsRConfig &config) {
    require(config.n >= 2, "Heisenberg scaling needs n >= 2");
    require(config.t > 0.0, "Heisenberg scaling needs t > 0");
    require(!config.r_list.empty(), "r_list is empty");
    require(config.repetitions >= 1, "repetitions must be >= 1");
    std::vector<double> xs;
    for (std::size_t r : config.r_list) {
        require(r >= 1, "r values must be >= 1");
        xs.push_back(static_cast<double>(r));
    }
    std::vector<RunSeries> out;
    for (HeisenbergScheme s : config.schemes) {
        out.emplace_back(to_string(s), "r", xs, config.repetitions);
    }

    parallel_for(config.repetitions, config.threads, [&](std::size_t rep) {
        const std::uint64_t seed = rep_seed(config.seed, "heisenberg-scaling", rep);
        const HamiltonianModel model = build_random_heisenberg(config.n, derive_seed(seed, "model"));
        const DenseStepper stepper(model);
        for (std::size_t si = 0; si < config.schemes.size(); ++si) {
            const HeisenbergScheme scheme = config.schemes[si];
            for (std::size_t i = 0; i < config.r_list.size(); ++i) {
                const std::size_t r = config.r_list[i];
                EvolutionPlan plan;
                plan.algorithm = Algorithm::pf1;
                plan.r = r;
                plan.dt = config.t / static_cast<double>(r);
                plan.schedule = heisenberg_schedule(scheme, config.n, r, model.num_terms(), seed);
                const double err = protected_run_dense(stepper, plan).error;
                out[si].reps[rep][i] = err;
                if (config.check_bounds && scheme != HeisenbergScheme::random_ordering) {
                    const BoundReport rep_c = appendixC_bound(model, plan.schedule, config.t, r);
                    if (!rep_c.checkable()) {
                        out[si].flags[rep][i] = "bound_unchecked";
                    } else if (err > rep_c.bound_value) {
                        out[si].flags[rep][i] = "bound_violation";
                    }
                }
            }
        }
    });
    for (auto &s : out) {
        s.resummarize();
        bool positive = true;
        for (double v : s.median) {
            positive = positive && v > 0.0;
        }
        if (positive && s.x.size() >= 4) {
            s.fit_median();
        }
    }
    return out;
}

}  // namespace symprot
