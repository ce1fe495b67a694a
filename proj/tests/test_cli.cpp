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

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "symprot/cli.hpp"

namespace symprot {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string &name) {
    const fs::path p = fs::path(SYMPROT_TEST_TMPDIR) / "cli_scratch" / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

struct CliRun {
    int code = 0;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "symprot");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    CliRun r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool has_error_containing(const std::vector<std::string> &errors, const std::string &needle) {
    return std::any_of(errors.begin(), errors.end(),
                       [&](const std::string &e) { return e.find(needle) != std::string::npos; });
}

TEST(Config, EmptyTextListsEveryMissingKey) {
    const ConfigParse p = parse_config_text("");
    EXPECT_EQ(p.errors.size(), required_config_keys().size());
    for (const auto &k : required_config_keys()) {
        EXPECT_TRUE(has_error_containing(p.errors, k)) << k;
    }
    EXPECT_THROW(parse_config(""), ConfigError);
}

TEST(Config, AllProblemsCollected) {
    const std::string text =
        "[experiment]\nid = bounds\nseed = abc\nbogus = 1\n"
        "[model]\nn = 2.5\nh = zz\n"
        "[nowhere]\nk = 1\n";
    const ConfigParse p = parse_config_text(text);
    EXPECT_TRUE(has_error_containing(p.errors, "experiment.seed"));
    EXPECT_TRUE(has_error_containing(p.errors, "unknown key 'experiment.bogus'"));
    EXPECT_TRUE(has_error_containing(p.errors, "model.n"));
    EXPECT_TRUE(has_error_containing(p.errors, "model.h"));
    EXPECT_TRUE(has_error_containing(p.errors, "unknown section [nowhere]"));
    EXPECT_GE(p.errors.size(), 5U);
}

TEST(Config, DuplicateAndMalformedLines) {
    const ConfigParse p = parse_config_text("[experiment]\nid = bounds\nseed = 1\nseed = 2\njunk\n[model\n");
    EXPECT_TRUE(has_error_containing(p.errors, "duplicate key 'experiment.seed'"));
    EXPECT_TRUE(has_error_containing(p.errors, "expected key = value"));
    EXPECT_TRUE(has_error_containing(p.errors, "malformed section header"));
}

TEST(Config, SemanticValidation) {
    const ConfigParse p = parse_config_text("[experiment]\nid = bounds\nseed = 1\n[plan]\nalgorithms = pf1, pf7\nt = -1\n");
    EXPECT_TRUE(has_error_containing(p.errors, "unknown algorithm 'pf7'"));
    EXPECT_TRUE(has_error_containing(p.errors, "plan.t"));
}

TEST(Config, TextRoundTrip) {
    ExperimentConfig c;
    c.id = "noise-sweep";
    c.seed = 77;
    c.algorithms = {"pf2", "mpf"};
    c.r_list = {3, 9, 27};
    c.h_list = {0.1, 1.0 / 3.0};
    c.lambda_list = {1, 4};
    c.eta = 1e-3;
    c.per_qubit_axes = true;
    c.placement = "after_step";
    c.log_base = "ln";
    const ExperimentConfig back = parse_config(config_to_text(c));
    EXPECT_EQ(back, c);
    EXPECT_EQ(config_to_text(back), config_to_text(c));
    EXPECT_EQ(parse_config(config_to_text(ExperimentConfig{"bounds"})), ExperimentConfig{"bounds"});
}

TEST(Config, CommentsIgnored) {
    const ExperimentConfig c = parse_config("# header\n[experiment]\nid = zeno-check ; trailing\nseed = 5\n");
    EXPECT_EQ(c.id, "zeno-check");
    EXPECT_EQ(c.seed, 5U);
}

TEST(Cli, ZenoCheckPrintsOneLine) {
    const CliRun r = run({"zeno-check", "--seed", "3", "--r", "100"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
    EXPECT_NE(r.out.find("m=2 "), std::string::npos);
    EXPECT_NE(r.out.find(" r=100 "), std::string::npos);
    EXPECT_NE(r.out.find("measured="), std::string::npos);
    EXPECT_EQ(run({"zeno-check", "--seed", "3", "--r", "100"}).out, r.out);
}

TEST(Cli, PrecedenceDefaultsFileFlags) {
    const fs::path dir = scratch("precedence");
    const fs::path cfg = dir / "z.ini";
    std::ofstream(cfg) << "[experiment]\nid = zeno-check\nseed = 4\n[plan]\nr = 50\nt = 2\n[zeno]\nm = 3\n";
    // File overrides defaults.
    CliRun a = run({"zeno-check", "--config", cfg.string()});
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_NE(a.out.find(" r=50 "), std::string::npos);
    EXPECT_NE(a.out.find("m=3 "), std::string::npos);
    EXPECT_NE(a.out.find(" t=2 "), std::string::npos);
    // Flags override the file.
    CliRun b = run({"zeno-check", "--config", cfg.string(), "--r", "80", "--set", "zeno.m=4"});
    ASSERT_EQ(b.code, kExitOk) << b.err;
    EXPECT_NE(b.out.find(" r=80 "), std::string::npos);
    EXPECT_NE(b.out.find("m=4 "), std::string::npos);
    EXPECT_NE(b.out.find(" t=2 "), std::string::npos);
}

TEST(Cli, ConfigErrorsExitTwo) {
    EXPECT_EQ(run({"zeno-check", "--set", "zeno.m=abc"}).code, kExitConfig);
    EXPECT_EQ(run({"zeno-check", "--set", "nosuch.key=1"}).code, kExitConfig);
    EXPECT_EQ(run({"zeno-check", "--config", "/nonexistent/file.ini"}).code, kExitConfig);
    EXPECT_EQ(run({"no-such-command"}).code, kExitConfig);
    EXPECT_EQ(run({}).code, kExitConfig);
    const fs::path dir = scratch("mismatch");
    std::ofstream(dir / "m.ini") << "[experiment]\nid = bounds\nseed = 1\n";
    const CliRun r = run({"zeno-check", "--config", (dir / "m.ini").string()});
    EXPECT_EQ(r.code, kExitConfig);
    EXPECT_NE(r.err.find("does not match"), std::string::npos);
}

TEST(Cli, DomainErrorsExitTwo) {
    EXPECT_EQ(run({"zeno-check", "--r", "1"}).code, kExitConfig);
}

TEST(Cli, HelpAndVersionExitZero) {
    EXPECT_EQ(run({"--help"}).code, kExitOk);
    EXPECT_EQ(run({"--version"}).code, kExitOk);
}

TEST(Cli, HeisenbergWritesCsvAndManifest) {
    const fs::path dir = scratch("heis");
    const CliRun r = run({"heisenberg-scaling", "--seed", "2", "--n", "3", "--reps", "4", "--out-dir", dir.string(),
                          "--set", "plan.r_list=4,8,16,32", "--svg"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(fs::exists(dir / "heisenberg-scaling_raw.csv"));
    EXPECT_TRUE(fs::exists(dir / "heisenberg-scaling_plot.svg"));
    std::ifstream mf(dir / "heisenberg-scaling_manifest.json");
    ASSERT_TRUE(mf.good());
    const auto m = nlohmann::json::parse(mf);
    EXPECT_EQ(m["master_seed"], 2);
    EXPECT_EQ(m["rep_seeds"].size(), 4U);
    EXPECT_EQ(m["config"]["model"]["n"], "3");
    std::ifstream csv(dir / "heisenberg-scaling_raw.csv");
    std::string header;
    std::getline(csv, header);
    EXPECT_EQ(header, "x,rep_id,value,flags");
}

TEST(Cli, SelftestPasses) {
    const CliRun r = run({"selftest"});
    EXPECT_EQ(r.code, kExitOk) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

RunSeries toy_series(std::size_t reps) {
    RunSeries s("toy", "r", {1, 10, 100, 1000}, reps);
    for (std::size_t rep = 0; rep < reps; ++rep) {
        for (std::size_t i = 0; i < 4; ++i) {
            s.reps[rep][i] = (1.0 + 0.1 * static_cast<double>(rep)) / s.x[i];
        }
    }
    s.resummarize();
    return s;
}

std::size_t count(const std::string &s, const std::string &needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

TEST(Svg, OnePolylinePerSeriesAndBandFromFourReps) {
    const AxesSpec axes{"t<1>", "r", "err", true, true};
    const std::string three = svg_string({toy_series(3)}, axes);
    EXPECT_EQ(count(three, "<polyline"), 1U);
    EXPECT_EQ(count(three, "class=\"band\""), 0U);
    const std::string four = svg_string({toy_series(4), toy_series(5)}, axes);
    EXPECT_EQ(count(four, "<polyline"), 2U);
    EXPECT_EQ(count(four, "class=\"band\""), 2U);
    EXPECT_NE(three.find("t&lt;1&gt;"), std::string::npos);
    EXPECT_EQ(svg_string({toy_series(4)}, axes), svg_string({toy_series(4)}, axes));
}

TEST(Svg, RejectsNonPositiveLogData) {
    RunSeries s = toy_series(2);
    s.reps[0][1] = -1.0;
    s.reps[1][1] = -1.0;
    s.resummarize();
    EXPECT_THROW(svg_string({s}, {"", "r", "e", true, true}), DomainError);
    EXPECT_NO_THROW(svg_string({s}, {"", "r", "e", true, false}));
}

}  // namespace
}  // namespace symprot
