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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "symprot/bounds.hpp"
#include "symprot/cli.hpp"
#include "symprot/kernels.hpp"
#include "symprot/rng.hpp"

namespace symprot {

namespace {

constexpr const char *kVersion = "1.0.0";

struct Invocation {
    std::string command;
    ExperimentConfig config;
    std::set<std::string> explicit_keys;
};

std::string read_text(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::string out_path(const ExperimentConfig &c, const std::string &name) {
    return (std::filesystem::path(c.out_dir) / (c.id + "_" + name)).string();
}

std::vector<std::uint64_t> rep_seeds(const ExperimentConfig &c, const std::string &tag) {
    std::vector<std::uint64_t> seeds;
    for (std::size_t rep = 0; rep < c.repetitions; ++rep) {
        seeds.push_back(rep_seed(c.seed, tag, rep));
    }
    return seeds;
}

nlohmann::json base_manifest(const ExperimentConfig &c, const std::string &seed_tag, nlohmann::json scale) {
    nlohmann::json m;
    m["experiment"] = c.id;
    m["version"] = kVersion;
    m["isa"] = kernels::isa_name(kernels::active_isa());
    m["config"] = config_to_json(c);
    m["master_seed"] = c.seed;
    if (!seed_tag.empty()) {
        m["seed_tag"] = seed_tag;
        m["rep_seeds"] = rep_seeds(c, seed_tag);
    }
    m["scale"] = std::move(scale);
    m["outputs"] = nlohmann::json::array();
    m["series"] = nlohmann::json::array();
    return m;
}

void write_series(const ExperimentConfig &c, const std::vector<RunSeries> &series, nlohmann::json &manifest,
                  const AxesSpec &axes, std::ostream &out) {
    for (const auto &s : series) {
        const std::string path = out_path(c, s.name + ".csv");
        write_file_atomic(path, series_csv(s));
        manifest["outputs"].push_back(path);
        manifest["series"].push_back(s.summary_json());
        out << s.name;
        if (!s.median.empty()) {
            out << " final_median=" << format_double(s.median.back());
        }
        if (s.fit) {
            out << " slope=" << format_double(s.fit->slope);
        }
        out << '\n';
    }
    if (c.svg) {
        const std::string path = out_path(c, "plot.svg");
        emit_svg(series, axes, path);
        manifest["outputs"].push_back(path);
    }
}

void write_manifest(const ExperimentConfig &c, const nlohmann::json &manifest) {
    write_file_atomic(out_path(c, "manifest.json"), manifest.dump(2) + "\n");
}

template <typename T, typename F>
std::vector<T> parse_names(const std::vector<std::string> &names, F parse) {
    std::vector<T> out;
    for (const auto &n : names) {
        try {
            out.push_back(parse(n));
        } catch (const DomainError &e) {
            throw ConfigError(std::string("schedule.schemes: ") + e.what());
        }
    }
    return out;
}

std::vector<Algorithm> algorithms_of(const ExperimentConfig &c) {
    std::vector<Algorithm> out;
    for (const auto &a : c.algorithms) {
        out.push_back(parse_algorithm(a));
    }
    return out;
}

// ---- experiment commands ----

int cmd_heisenberg(const Invocation &inv, std::ostream &out) {
    const ExperimentConfig &c = inv.config;
    ErrorVsRConfig cfg;
    cfg.n = c.n;
    cfg.t = c.t;
    if (!c.r_list.empty()) {
        cfg.r_list = c.r_list;
    }
    if (!c.schemes.empty()) {
        cfg.schemes = parse_names<HeisenbergScheme>(c.schemes, parse_heisenberg_scheme);
    }
    cfg.repetitions = c.repetitions;
    cfg.seed = c.seed;
    cfg.threads = c.threads;
    cfg.check_bounds = c.check_bounds;
    const auto series = exp_error_vs_r(cfg);
    auto manifest = base_manifest(c, "heisenberg-scaling",
                                  {{"n", cfg.n}, {"t", cfg.t}, {"r_list", cfg.r_list}, {"repetitions", cfg.repetitions}});
    write_series(c, series, manifest, {"PF1 error vs r", "r", "spectral-norm error", true, true}, out);
    write_manifest(c, manifest);
    return kExitOk;
}

int cmd_mbl_steps(const Invocation &inv, std::ostream &out) {
    const ExperimentConfig &c = inv.config;
    MinStepsConfig cfg;
    cfg.n_list = c.n_list;
    cfg.h = c.h;
    cfg.t_per_site = c.t_per_site;
    cfg.epsilon = c.epsilon;
    cfg.repetitions = c.repetitions;
    cfg.seed = c.seed;
    cfg.threads = c.threads;
    cfg.r_max = c.r_max;
    const auto series = exp_min_trotter_steps(cfg);
    auto manifest = base_manifest(c, "mbl",
                                  {{"n_list", cfg.n_list}, {"h", cfg.h}, {"t_per_site", cfg.t_per_site},
                                   {"epsilon", cfg.epsilon}, {"repetitions", cfg.repetitions}});
    write_series(c, series, manifest, {"minimal Trotter number", "n", "r", false, true}, out);
    write_manifest(c, manifest);
    return kExitOk;
}

int cmd_disorder(const Invocation &inv, std::ostream &out) {
    const ExperimentConfig &c = inv.config;
    DisorderSweepConfig cfg;
    cfg.n = c.n;
    cfg.h_list = c.h_list;
    cfg.t_per_site = c.t_per_site;
    cfg.epsilon = c.epsilon;
    cfg.repetitions = c.repetitions;
    cfg.seed = c.seed;
    cfg.threads = c.threads;
    cfg.r_max = c.r_max;
    const auto series = exp_disorder_sweep(cfg);
    auto manifest = base_manifest(c, "mbl",
                                  {{"n", cfg.n}, {"h_list", cfg.h_list}, {"t_per_site", cfg.t_per_site},
                                   {"epsilon", cfg.epsilon}, {"repetitions", cfg.repetitions}});
    write_series(c, series, manifest, {"minimal Trotter number vs disorder", "h", "r", false, true}, out);
    write_manifest(c, manifest);
    return kExitOk;
}

int cmd_schwinger(const Invocation &inv, std::ostream &out) {
    const ExperimentConfig &c = inv.config;
    SchwingerConfig cfg;
    cfg.n = c.n;
    cfg.cutoff = c.cutoff;
    cfg.x = c.x;
    cfg.mu = c.mu;
    cfg.dt = c.dt;
    cfg.steps = c.steps;
    cfg.record_every = c.record_every;
    cfg.algorithms = algorithms_of(c);
    if (!c.schemes.empty()) {
        cfg.schemes = parse_names<GaugeScheme>(c.schemes, parse_gauge_scheme);
    }
    cfg.repetitions = c.repetitions;
    cfg.seed = c.seed;
    cfg.threads = c.threads;
    auto series = exp_schwinger_leakage(cfg);
    // Step 0 has zero leakage; the log plot starts at the first recorded step.
    auto manifest = base_manifest(c, "schwinger-leakage",
                                  {{"n", cfg.n}, {"cutoff", cfg.cutoff}, {"dt", cfg.dt}, {"steps", cfg.steps},
                                   {"repetitions", cfg.repetitions}, {"note", "steps is a chosen default"}});
    ExperimentConfig no_svg = c;
    no_svg.svg = false;
    write_series(no_svg, series, manifest, {}, out);
    if (c.svg) {
        std::vector<RunSeries> plot;
        for (auto s : series) {
            RunSeries p(s.name, s.x_label, {}, s.num_reps());
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                if (s.x[i] > 0 && s.median[i] > 0 && s.q25[i] > 0) {
                    p.x.push_back(s.x[i]);
                    p.median.push_back(s.median[i]);
                    p.q25.push_back(s.q25[i]);
                    p.q75.push_back(s.q75[i]);
                }
            }
            plot.push_back(std::move(p));
        }
        const std::string path = out_path(c, "plot.svg");
        emit_svg(plot, {"gauge leakage", "step", "leakage", true, true}, path);
        manifest["outputs"].push_back(path);
    }
    write_manifest(c, manifest);
    return kExitOk;
}

int cmd_noise(const Invocation &inv, std::ostream &out) {
    const ExperimentConfig &c = inv.config;
    NoiseConfig cfg;
    cfg.n = c.n;
    cfg.cutoff = c.cutoff;
    cfg.x = c.x;
    cfg.mu = c.mu;
    cfg.dt = c.dt;
    if (inv.explicit_keys.count("plan.steps")) {
        cfg.steps = c.steps;
    }
    if (inv.explicit_keys.count("plan.algorithms")) {
        cfg.algorithm = parse_algorithm(c.algorithms.at(0));
    }
    cfg.record_every = c.record_every;
    cfg.eta = c.eta;
    cfg.lambda_list = c.lambda_list;
    cfg.per_qubit_axes = c.per_qubit_axes;
    cfg.placement = c.placement == "after_step" ? NoisePlacement::after_step : NoisePlacement::inside_protection;
    cfg.repetitions = c.repetitions;
    cfg.seed = c.seed;
    cfg.threads = c.threads;
    const auto res = exp_noise_correlation(cfg);
    auto manifest = base_manifest(c, "noise-sweep",
                                  {{"n", cfg.n}, {"cutoff", cfg.cutoff}, {"steps", cfg.steps}, {"eta", cfg.eta},
                                   {"algorithm", to_string(cfg.algorithm)}, {"repetitions", cfg.repetitions}});
    ExperimentConfig no_svg = c;
    no_svg.svg = false;
    std::vector<RunSeries> all = res.series;
    all.push_back(res.final_ratio);
    write_series(no_svg, all, manifest, {}, out);
    if (c.svg) {
        const std::string path = out_path(c, "plot.svg");
        emit_svg({res.final_ratio}, {"SP / raw final leakage", "lambda", "ratio", true, true}, path);
        manifest["outputs"].push_back(path);
    }
    write_manifest(c, manifest);
    return kExitOk;
}

// ---- bounds ----

HamiltonianModel model_of(const ExperimentConfig &c, std::uint64_t seed) {
    if (c.model_kind == "random_heisenberg") {
        return build_random_heisenberg(c.n, derive_seed(seed, "model"));
    }
    if (c.model_kind == "mbl") {
        return build_mbl_heisenberg(c.n, c.h, derive_seed(seed, "model"));
    }
    return build_schwinger(c.n, c.cutoff, c.x, c.mu);
}

ProtectionSchedule bounds_schedule(const ExperimentConfig &c, const HamiltonianModel &model, std::size_t r,
                                   std::uint64_t seed) {
    std::string name = c.bounds_schedule;
    if (name == "auto") {
        name = c.model_kind == "random_heisenberg" ? "hadamard_det" : c.model_kind == "mbl" ? "u1_z" : "gauge_u1";
    }
    const auto s = derive_seed(seed, "schedule");
    if (name == "identity") return ProtectionSchedule::identity(r);
    if (name == "haar_su2") return ProtectionSchedule::haar_su2(c.n, r, s);
    if (name == "hadamard_det") return ProtectionSchedule::hadamard_det(c.n, r);
    if (name == "u1_z") return ProtectionSchedule::u1_z(c.n, r, s, ScheduleMode::powers_of_c0);
    const SymmetryGroup g = name == "gauge_u1" ? SymmetryGroup::u1_gauge : SymmetryGroup::z2l_gauge;
    return ProtectionSchedule::gauge(model, r, g, ScheduleMode::uniform_angles, s);
}

std::string bound_header(const BoundReport &rep) {
    std::string h = "kind,log_base,t,r,dt,alpha,beta,gamma,chi,kappa,lambda_c,h_norm,xi,m,v0_norm,vbar0_norm,"
                    "step_error,bound_value,defined,preconditions_hold";
    for (const auto &p : rep.preconditions) {
        h += "," + p.name;
    }
    return h + ",measured_error";
}

std::string bound_row(const BoundReport &rep) {
    std::ostringstream os;
    os << to_string(rep.kind) << ',' << to_string(rep.log_base) << ',' << format_double(rep.t) << ',' << rep.r
       << ',' << format_double(rep.dt);
    for (double v : {rep.alpha, rep.beta, rep.gamma, rep.chi, rep.kappa, rep.lambda_c, rep.h_norm, rep.xi}) {
        os << ',' << format_double(v);
    }
    os << ',' << rep.m;
    for (double v : {rep.v0_norm, rep.vbar0_norm, rep.step_error, rep.bound_value}) {
        os << ',' << format_double(v);
    }
    os << ',' << (rep.defined ? "true" : "false") << ',' << (rep.preconditions_hold() ? "true" : "false");
    for (const auto &p : rep.preconditions) {
        os << ',' << (p.holds ? "true" : "false");
    }
    os << ',' << (rep.measured_error ? format_double(*rep.measured_error) : std::string());
    return os.str();
}

int cmd_bounds(const Invocation &inv, std::ostream &out) {
    const ExperimentConfig &c = inv.config;
    const HamiltonianModel model = model_of(c, c.seed);
    const std::vector<std::size_t> rs = c.r_list.empty() ? std::vector<std::size_t>{c.r} : c.r_list;
    BoundOptions opts;
    opts.log_base = c.log_base == "ln" ? LogBase::natural : LogBase::binary;
    opts.measure = c.measure;
    std::string csv;
    for (std::size_t r : rs) {
        const ProtectionSchedule sched = bounds_schedule(c, model, r, c.seed);
        const bool thm1 = c.bounds_kind == "theorem1" || (c.bounds_kind == "auto" && sched.is_powers_of_base());
        const BoundReport rep =
            thm1 ? theorem1_bound(model, sched, c.t, r, opts) : appendixC_bound(model, sched, c.t, r, opts);
        if (csv.empty()) {
            csv = bound_header(rep) + "\n";
            out << bound_header(rep) << '\n';
        }
        csv += bound_row(rep) + "\n";
        out << bound_row(rep) << '\n';
    }
    write_file_atomic(out_path(c, "report.csv"), csv);
    auto manifest = base_manifest(c, "", {{"model", c.model_kind}, {"n", c.n}, {"t", c.t}, {"r", rs}});
    manifest["outputs"].push_back(out_path(c, "report.csv"));
    write_manifest(c, manifest);
    return kExitOk;
}

// ---- zeno ----

struct ZenoInstance {
    Operator g;
    Operator kick;
};

/// Kick with m evenly spaced eigenphases on a dim-d register and a random Hermitian G of norm g_norm.
ZenoInstance zeno_instance(std::size_t m, std::size_t dim, double g_norm, std::uint64_t seed) {
    const auto D = static_cast<Eigen::Index>(dim);
    Vector diag(D);
    for (Eigen::Index i = 0; i < D; ++i) {
        diag(i) = std::polar(1.0, -2.0 * kPi * static_cast<double>(static_cast<std::size_t>(i) % m) /
                                      static_cast<double>(m));
    }
    Rng rng(seed);
    Matrix a(D, D);
    for (Eigen::Index i = 0; i < D; ++i) {
        for (Eigen::Index j = 0; j < D; ++j) {
            a(i, j) = cplx(rng.normal(), rng.normal());
        }
    }
    Matrix g = 0.5 * (a + a.adjoint());
    const double nrm = spectral_norm(g);
    g *= g_norm / nrm;
    const Layout layout({dim});
    return {Operator(layout, g), Operator(layout, Matrix(diag.asDiagonal()))};
}

int cmd_zeno(const Invocation &inv, std::ostream &out) {
    const ExperimentConfig &c = inv.config;
    require(c.r >= 2, "zeno-check needs r >= 2");
    const ZenoInstance z = zeno_instance(c.zeno_m, c.zeno_dim, c.g_norm, derive_seed(c.seed, "zeno"));
    const double measured = zeno_error_measured(z.g, z.kick, c.t, c.r);
    const ZenoBound nb = zeno_bound_new(z.g, z.kick, c.t, c.r, LogBase::binary);
    const ZenoBound nl = zeno_bound_new(z.g, z.kick, c.t, c.r, LogBase::natural);
    const ZenoBound ob = zeno_bound_old(z.g, z.kick, c.t, c.r);
    out << "m=" << nb.m << " xi=" << format_double(nb.xi) << " g_norm=" << format_double(c.g_norm)
        << " t=" << format_double(c.t) << " r=" << c.r << " measured=" << format_double(measured)
        << " new=" << format_double(nb.value) << " new_ln=" << format_double(nl.value)
        << " old=" << format_double(ob.value) << '\n';
    return kExitOk;
}

// ---- selftest ----

int cmd_selftest(const Invocation &inv, std::ostream &out) {
    int failures = 0;
    auto report = [&](const std::string &name, bool ok, const std::string &detail) {
        out << (ok ? "PASS " : "FAIL ") << name << " " << detail << '\n';
        failures += ok ? 0 : 1;
    };
    const std::uint64_t seed = inv.config.seed;
    {
        const std::size_t nq = 10, n = std::size_t{1} << nq;
        Rng rng(seed);
        std::vector<cplx> psi(n), ref;
        for (auto &v : psi) {
            v = cplx(rng.normal(), rng.normal());
        }
        std::vector<cplx> mat(16);
        for (auto &v : mat) {
            v = cplx(rng.normal(), rng.normal());
        }
        const unsigned qs[2] = {3, 7};
        ref = psi;
        kernels::scalar::apply_dense_block(ref.data(), n, qs, 2, mat.data());
        const bool has_avx2 = kernels::cpu_supports_avx2() && kernels::compiled_with_avx2();
        double diff = 0.0;
        if (has_avx2) {
            std::vector<cplx> v = psi;
            kernels::avx2::apply_dense_block(v.data(), n, qs, 2, mat.data());
            for (std::size_t i = 0; i < n; ++i) {
                diff = std::max(diff, std::abs(v[i] - ref[i]));
            }
        }
        report("kernel_equivalence", diff <= 1e-12,
               has_avx2 ? "max_diff=" + format_double(diff) : std::string("avx2 unavailable, scalar only"));
    }
    {
        const auto model = build_random_heisenberg(3, derive_seed(seed, "selftest"));
        const Operator s = pf1_step(model, 0.1);
        report("pf1_unitary", s.is_unitary(1e-10), "");
        const auto v = vbar0(model, ProtectionSchedule::hadamard_det(3, 8), Frame::none);
        report("hadamard_cancellation", v.norm <= 1e-10, "norm=" + format_double(v.norm));
    }
    {
        const double nl = zeno_bound_new_value(1.0, 2, 1.0, 1.0, 100, LogBase::natural);
        const double old = zeno_bound_old_value(1.0, 2, 1.0, 1.0, 100);
        report("zeno_new_below_old", nl < old, "new=" + format_double(nl) + " old=" + format_double(old));
    }
    {
        const auto model = build_schwinger(2, 2, 0.6, 0.1);
        const auto phys = physical_projector(model);
        const auto gs = ground_state_physical(model);
        report("ground_state_physical", leakage(gs.state, phys) <= 1e-12, "");
    }
    return failures == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Symmetry-protected Trotter simulation experiments"};
    app.set_version_flag("--version", kVersion);
    // "--h" is the disorder strength, so help is long-form only.
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);

    struct Flag {
        std::string name;
        std::string key;
        std::string help;
    };
    const std::vector<Flag> flags = {
        {"--seed", "experiment.seed", "master seed"},
        {"--reps", "experiment.repetitions", "repetitions"},
        {"--out-dir", "experiment.out_dir", "output directory"},
        {"--threads", "experiment.threads", "worker threads (0: SYMPROT_THREADS or 1)"},
        {"--model", "model.kind", "random_heisenberg, mbl or schwinger"},
        {"--n", "model.n", "number of sites"},
        {"--h", "model.h", "disorder strength"},
        {"--t", "plan.t", "evolution time"},
        {"--r", "plan.r", "Trotter steps"},
        {"--dt", "plan.dt", "time step"},
        {"--steps", "plan.steps", "number of steps"},
        {"--algorithm", "plan.algorithms", "pf1, pf2, pf4, mpf (comma list)"},
        {"--m", "zeno.m", "distinct kick eigenphases"},
        {"--g-norm", "zeno.g_norm", "spectral norm of G"},
    };
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"heisenberg-scaling", "PF1 error versus r for the random Heisenberg chain"},
        {"mbl-steps", "minimal Trotter number for the disordered chain"},
        {"mbl-disorder-sweep", "minimal Trotter number versus disorder strength"},
        {"schwinger-leakage", "gauge leakage of the lattice Schwinger model"},
        {"noise-sweep", "leakage under correlated coherent noise"},
        {"bounds", "evaluate the Trotter error bounds"},
        {"zeno-check", "Zeno error and bounds on one random instance"},
        {"selftest", "quick internal consistency checks"},
    };

    std::string config_path;
    bool svg = false;
    std::vector<std::string> sets;
    std::map<std::string, std::string> values;
    std::vector<std::pair<CLI::App *, std::vector<std::pair<CLI::Option *, std::string>>>> bound;
    for (const auto &[name, help] : commands) {
        CLI::App *sc = app.add_subcommand(name, help);
        sc->add_option("--config", config_path, "config file");
        sc->add_flag("--svg", svg, "also write an SVG plot");
        sc->add_option("--set", sets, "override section.key=value")->take_all();
        std::vector<std::pair<CLI::Option *, std::string>> opts;
        for (const auto &f : flags) {
            opts.emplace_back(sc->add_option(f.name, values[name + f.name], f.help), f.key);
        }
        bound.emplace_back(sc, std::move(opts));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        Invocation inv;
        std::vector<std::pair<std::string, std::string>> overrides;
        for (auto &[sc, opts] : bound) {
            if (!sc->parsed()) {
                continue;
            }
            inv.command = sc->get_name();
            for (auto &[opt, key] : opts) {
                if (opt->count() > 0) {
                    overrides.emplace_back(key, opt->as<std::string>());
                }
            }
        }
        std::vector<std::string> errors;
        if (!config_path.empty()) {
            ConfigParse p = parse_config_text(read_text(config_path), false);
            errors = p.errors;
            inv.config = p.config;
            inv.explicit_keys = p.present;
            if (p.present.count("experiment.id") && inv.config.id != inv.command) {
                errors.push_back("experiment.id '" + inv.config.id + "' does not match subcommand '" + inv.command +
                                 "'");
            }
        }
        inv.config.id = inv.command;
        for (const auto &s : sets) {
            const auto eq = s.find('=');
            if (eq == std::string::npos) {
                errors.push_back("--set expects section.key=value, got '" + s + "'");
                continue;
            }
            overrides.emplace_back(s.substr(0, eq), s.substr(eq + 1));
        }
        if (svg) {
            overrides.emplace_back("experiment.svg", "true");
        }
        for (const auto &[key, value] : overrides) {
            const std::string e = set_config_value(inv.config, key, value);
            if (e.empty()) {
                inv.explicit_keys.insert(key);
            } else {
                errors.push_back(e);
            }
        }
        const char *ci = std::getenv("CI");
        if (ci && *ci && !inv.explicit_keys.count("experiment.seed") && inv.command != "selftest") {
            errors.push_back("a seed is required in CI mode (--seed or experiment.seed)");
        }
        for (auto &e : validate_config(inv.config)) {
            errors.push_back(std::move(e));
        }
        if (!errors.empty()) {
            std::string msg = "invalid configuration:";
            for (const auto &e : errors) {
                msg += "\n  " + e;
            }
            throw ConfigError(msg);
        }

        const std::string &cmd = inv.command;
        if (cmd == "heisenberg-scaling") return cmd_heisenberg(inv, out);
        if (cmd == "mbl-steps") return cmd_mbl_steps(inv, out);
        if (cmd == "mbl-disorder-sweep") return cmd_disorder(inv, out);
        if (cmd == "schwinger-leakage") return cmd_schwinger(inv, out);
        if (cmd == "noise-sweep") return cmd_noise(inv, out);
        if (cmd == "bounds") return cmd_bounds(inv, out);
        if (cmd == "zeno-check") return cmd_zeno(inv, out);
        return cmd_selftest(inv, out);
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NumericalError &e) {
        err << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace symprot
