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

#include <charconv>
#include <cmath>
#include <functional>
#include <sstream>

#include "symprot/cli.hpp"

namespace symprot {

namespace {

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string &s) {
    std::vector<std::string> out;
    if (trim(s).empty()) {
        return out;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(trim(item));
    }
    return out;
}

template <typename T>
bool parse_integer(const std::string &s, T &out) {
    const std::string v = trim(s);
    if (v.empty()) {
        return false;
    }
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    return res.ec == std::errc() && res.ptr == v.data() + v.size();
}

bool parse_real(const std::string &s, double &out) {
    const std::string v = trim(s);
    if (v.empty()) {
        return false;
    }
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    return res.ec == std::errc() && res.ptr == v.data() + v.size() && std::isfinite(out);
}

bool parse_flag(const std::string &s, bool &out) {
    const std::string v = trim(s);
    if (v == "true" || v == "1" || v == "yes") {
        out = true;
        return true;
    }
    if (v == "false" || v == "0" || v == "no") {
        out = false;
        return true;
    }
    return false;
}

using Setter = std::function<std::string(ExperimentConfig &, const std::string &)>;
using Getter = std::function<std::string(const ExperimentConfig &)>;

struct KeySpec {
    std::string section;
    std::string key;
    Setter set;
    Getter get;
};

template <typename T>
KeySpec integer_key(std::string section, std::string key, T ExperimentConfig::*field) {
    return {section, key,
            [field](ExperimentConfig &c, const std::string &v) -> std::string {
                T tmp{};
                if (!parse_integer(v, tmp)) {
                    return "expected an integer, got '" + trim(v) + "'";
                }
                c.*field = tmp;
                return "";
            },
            [field](const ExperimentConfig &c) { return std::to_string(c.*field); }};
}

KeySpec real_key(std::string section, std::string key, double ExperimentConfig::*field) {
    return {section, key,
            [field](ExperimentConfig &c, const std::string &v) -> std::string {
                double tmp = 0.0;
                if (!parse_real(v, tmp)) {
                    return "expected a number, got '" + trim(v) + "'";
                }
                c.*field = tmp;
                return "";
            },
            [field](const ExperimentConfig &c) { return format_double(c.*field); }};
}

KeySpec flag_key(std::string section, std::string key, bool ExperimentConfig::*field) {
    return {section, key,
            [field](ExperimentConfig &c, const std::string &v) -> std::string {
                bool tmp = false;
                if (!parse_flag(v, tmp)) {
                    return "expected true or false, got '" + trim(v) + "'";
                }
                c.*field = tmp;
                return "";
            },
            [field](const ExperimentConfig &c) { return std::string(c.*field ? "true" : "false"); }};
}

KeySpec text_key(std::string section, std::string key, std::string ExperimentConfig::*field) {
    return {section, key,
            [field](ExperimentConfig &c, const std::string &v) -> std::string {
                c.*field = trim(v);
                return "";
            },
            [field](const ExperimentConfig &c) { return c.*field; }};
}

KeySpec text_list_key(std::string section, std::string key, std::vector<std::string> ExperimentConfig::*field) {
    return {section, key,
            [field](ExperimentConfig &c, const std::string &v) -> std::string {
                c.*field = split_list(v);
                return "";
            },
            [field](const ExperimentConfig &c) {
                std::string out;
                for (std::size_t i = 0; i < (c.*field).size(); ++i) {
                    out += (i ? "," : "") + (c.*field)[i];
                }
                return out;
            }};
}

template <typename T>
KeySpec integer_list_key(std::string section, std::string key, std::vector<T> ExperimentConfig::*field) {
    return {section, key,
            [field](ExperimentConfig &c, const std::string &v) -> std::string {
                std::vector<T> tmp;
                for (const auto &item : split_list(v)) {
                    T x{};
                    if (!parse_integer(item, x)) {
                        return "expected a comma-separated integer list, got '" + trim(v) + "'";
                    }
                    tmp.push_back(x);
                }
                c.*field = std::move(tmp);
                return "";
            },
            [field](const ExperimentConfig &c) {
                std::string out;
                for (std::size_t i = 0; i < (c.*field).size(); ++i) {
                    out += (i ? "," : "") + std::to_string((c.*field)[i]);
                }
                return out;
            }};
}

KeySpec real_list_key(std::string section, std::string key, std::vector<double> ExperimentConfig::*field) {
    return {section, key,
            [field](ExperimentConfig &c, const std::string &v) -> std::string {
                std::vector<double> tmp;
                for (const auto &item : split_list(v)) {
                    double x = 0.0;
                    if (!parse_real(item, x)) {
                        return "expected a comma-separated number list, got '" + trim(v) + "'";
                    }
                    tmp.push_back(x);
                }
                c.*field = std::move(tmp);
                return "";
            },
            [field](const ExperimentConfig &c) {
                std::string out;
                for (std::size_t i = 0; i < (c.*field).size(); ++i) {
                    out += (i ? "," : "") + format_double((c.*field)[i]);
                }
                return out;
            }};
}

const std::vector<KeySpec> &key_table() {
    using C = ExperimentConfig;
    static const std::vector<KeySpec> table = {
        text_key("experiment", "id", &C::id),
        integer_key("experiment", "seed", &C::seed),
        integer_key("experiment", "repetitions", &C::repetitions),
        text_key("experiment", "out_dir", &C::out_dir),
        flag_key("experiment", "svg", &C::svg),
        integer_key("experiment", "threads", &C::threads),
        text_key("model", "kind", &C::model_kind),
        integer_key("model", "n", &C::n),
        real_key("model", "h", &C::h),
        integer_key("model", "cutoff", &C::cutoff),
        real_key("model", "x", &C::x),
        real_key("model", "mu", &C::mu),
        text_list_key("plan", "algorithms", &C::algorithms),
        real_key("plan", "t", &C::t),
        real_key("plan", "dt", &C::dt),
        integer_key("plan", "steps", &C::steps),
        integer_key("plan", "r", &C::r),
        integer_list_key("plan", "r_list", &C::r_list),
        integer_key("plan", "record_every", &C::record_every),
        text_list_key("schedule", "schemes", &C::schemes),
        flag_key("schedule", "check_bounds", &C::check_bounds),
        real_key("search", "epsilon", &C::epsilon),
        integer_list_key("search", "n_list", &C::n_list),
        real_list_key("search", "h_list", &C::h_list),
        real_key("search", "t_per_site", &C::t_per_site),
        integer_key("search", "r_max", &C::r_max),
        real_key("noise", "eta", &C::eta),
        integer_list_key("noise", "lambda_list", &C::lambda_list),
        flag_key("noise", "per_qubit_axes", &C::per_qubit_axes),
        text_key("noise", "placement", &C::placement),
        text_key("bounds", "schedule", &C::bounds_schedule),
        text_key("bounds", "kind", &C::bounds_kind),
        text_key("bounds", "log_base", &C::log_base),
        flag_key("bounds", "measure", &C::measure),
        integer_key("zeno", "m", &C::zeno_m),
        real_key("zeno", "g_norm", &C::g_norm),
        integer_key("zeno", "dim", &C::zeno_dim),
    };
    return table;
}

const KeySpec *find_key(const std::string &dotted) {
    for (const auto &k : key_table()) {
        if (k.section + "." + k.key == dotted) {
            return &k;
        }
    }
    return nullptr;
}

template <typename T>
bool contains(const std::vector<std::string> &names, const T &value) {
    for (const auto &n : names) {
        if (n == value) {
            return true;
        }
    }
    return false;
}

}  // namespace

const std::vector<std::string> &required_config_keys() {
    static const std::vector<std::string> keys = {"experiment.id", "experiment.seed"};
    return keys;
}

std::string set_config_value(ExperimentConfig &config, const std::string &dotted_key, const std::string &value) {
    const KeySpec *k = find_key(dotted_key);
    if (!k) {
        return "unknown key '" + dotted_key + "'";
    }
    const std::string e = k->set(config, value);
    return e.empty() ? e : dotted_key + ": " + e;
}

ConfigParse parse_config_text(const std::string &text, bool require_keys) {
    ConfigParse out;
    std::istringstream in(text);
    std::string line;
    std::string section;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (line.front() == '[') {
            if (line.back() != ']') {
                out.errors.push_back(where + "malformed section header '" + line + "'");
                continue;
            }
            section = trim(line.substr(1, line.size() - 2));
            bool known = false;
            for (const auto &k : key_table()) {
                known = known || k.section == section;
            }
            if (!known) {
                out.errors.push_back(where + "unknown section [" + section + "]");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            out.errors.push_back(where + "expected key = value");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty()) {
            out.errors.push_back(where + "key '" + key + "' outside any section");
            continue;
        }
        const std::string dotted = section + "." + key;
        if (out.present.count(dotted)) {
            out.errors.push_back(where + "duplicate key '" + dotted + "'");
            continue;
        }
        const std::string e = set_config_value(out.config, dotted, value);
        if (!e.empty()) {
            out.errors.push_back(where + e);
            continue;
        }
        out.present.insert(dotted);
    }
    if (require_keys) {
        for (const auto &k : required_config_keys()) {
            if (!out.present.count(k)) {
                out.errors.push_back("missing required key '" + k + "'");
            }
        }
    }
    if (out.errors.empty()) {
        for (auto &e : validate_config(out.config)) {
            out.errors.push_back(std::move(e));
        }
    }
    return out;
}

ExperimentConfig parse_config(const std::string &text) {
    ConfigParse p = parse_config_text(text, true);
    if (!p.errors.empty()) {
        std::string msg = "invalid configuration:";
        for (const auto &e : p.errors) {
            msg += "\n  " + e;
        }
        throw ConfigError(msg);
    }
    return p.config;
}

std::string config_to_text(const ExperimentConfig &config) {
    std::string out;
    std::string section;
    for (const auto &k : key_table()) {
        if (k.section != section) {
            section = k.section;
            out += (out.empty() ? "" : "\n") + std::string("[") + section + "]\n";
        }
        out += k.key + " = " + k.get(config) + "\n";
    }
    return out;
}

nlohmann::json config_to_json(const ExperimentConfig &config) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto &k : key_table()) {
        j[k.section][k.key] = k.get(config);
    }
    return j;
}

std::vector<std::string> validate_config(const ExperimentConfig &c) {
    std::vector<std::string> errors;
    auto check = [&](bool ok, const std::string &msg) {
        if (!ok) {
            errors.push_back(msg);
        }
    };
    const std::vector<std::string> ids = {"heisenberg-scaling", "mbl-steps", "mbl-disorder-sweep", "schwinger-leakage",
                                          "noise-sweep",        "bounds",    "zeno-check",         "selftest"};
    check(c.id.empty() || contains(ids, c.id), "experiment.id: unknown experiment '" + c.id + "'");
    check(c.repetitions >= 1, "experiment.repetitions: must be >= 1");
    check(contains({"random_heisenberg", "mbl", "schwinger"}, c.model_kind),
          "model.kind: expected random_heisenberg, mbl or schwinger");
    check(c.n >= 2, "model.n: must be >= 2");
    check(c.cutoff >= 1, "model.cutoff: must be >= 1");
    check(c.h >= 0.0, "model.h: must be >= 0");
    for (const auto &a : c.algorithms) {
        check(contains({"pf1", "pf2", "pf4", "mpf"}, a), "plan.algorithms: unknown algorithm '" + a + "'");
    }
    check(!c.algorithms.empty(), "plan.algorithms: must not be empty");
    check(c.t > 0.0, "plan.t: must be > 0");
    check(c.dt > 0.0, "plan.dt: must be > 0");
    check(c.steps >= 1, "plan.steps: must be >= 1");
    check(c.r >= 1, "plan.r: must be >= 1");
    for (std::size_t r : c.r_list) {
        check(r >= 1, "plan.r_list: entries must be >= 1");
    }
    check(c.record_every >= 1, "plan.record_every: must be >= 1");
    check(c.epsilon > 0.0, "search.epsilon: must be > 0");
    check(c.t_per_site > 0.0, "search.t_per_site: must be > 0");
    check(c.r_max >= 1, "search.r_max: must be >= 1");
    check(c.eta >= 0.0, "noise.eta: must be >= 0");
    for (std::size_t l : c.lambda_list) {
        check(l >= 1, "noise.lambda_list: entries must be >= 1");
    }
    check(contains({"inside_protection", "after_step"}, c.placement),
          "noise.placement: expected inside_protection or after_step");
    check(contains({"auto", "identity", "haar_su2", "hadamard_det", "u1_z", "gauge_u1", "gauge_z2l"},
                   c.bounds_schedule),
          "bounds.schedule: unknown schedule '" + c.bounds_schedule + "'");
    check(contains({"auto", "theorem1", "appendix_c"}, c.bounds_kind),
          "bounds.kind: expected auto, theorem1 or appendix_c");
    check(contains({"log2", "ln"}, c.log_base), "bounds.log_base: expected log2 or ln");
    check(c.zeno_m >= 1, "zeno.m: must be >= 1");
    check(c.zeno_dim >= c.zeno_m && c.zeno_dim <= 64, "zeno.dim: must be in [m, 64]");
    check(c.g_norm >= 0.0, "zeno.g_norm: must be >= 0");
    return errors;
}

}  // namespace symprot
