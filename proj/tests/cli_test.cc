// Copyright 2026 The qtransduce Authors
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

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "gtest/gtest.h"
#include "json.hpp"
#include "qtd/cli/app.h"
#include "qtd/cli/execute.h"
#include "qtd/cli/manifest.h"
#include "qtd/cli/output.h"

namespace qtd::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char *kTable1 = R"(# three efficiencies
[experiment]
strategy = DQT
trials = 100

[sweep]
eta = 0.8, 0.5, 0.1
)";

constexpr const char *kTable2 = R"([experiment]
strategy = EQT
trials = 200

[sweep]
eta_up = 0.8, 0.5, 0.1
detector_kind = PNRD, SPD
eta_d = 1, 0.25
)";

class TempDir {
   public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() /
                ("qtd_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    const fs::path &path() const {
        return path_;
    }

   private:
    fs::path path_;
};

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) {
        cells.push_back(cell);
    }
    return cells;
}

ExecuteReport run_text(const std::string &text, const fs::path &out, bool trace = false) {
    ExecuteOptions options;
    options.out_dir = out;
    options.trace = trace;
    options.quiet = true;
    std::ostringstream log, errors;
    return execute(parse_manifest_text(text), options, log, errors);
}

int app(std::vector<std::string> args, std::string *err_text = nullptr) {
    args.insert(args.begin(), "qtransduce");
    std::vector<char *> argv;
    for (std::string &a : args) {
        argv.push_back(a.data());
    }
    std::ostringstream out, err;
    int code = run_app(static_cast<int>(argv.size()), argv.data(), out, err);
    if (err_text) {
        *err_text = err.str();
    }
    return code;
}

TEST(Manifest, MinimalDqtGetsDefaults) {
    RunManifest m = parse_manifest_text("[experiment]\nstrategy = DQT\neta = 0.5\n");
    EXPECT_EQ(m.base.period_ps, 1'000'000);
    EXPECT_EQ(m.base.trials, 100);
    EXPECT_EQ(m.base.attenuation_length_km, 22.0);
    EXPECT_EQ(m.base.master_seed, 0u);
    EXPECT_EQ(m.base.eta_up_source, 0.5);
    EXPECT_EQ(m.base.eta_down_dest, 0.5);
    EXPECT_EQ(m.replicate_count, 1);
    EXPECT_EQ(expand(m).size(), 1u);
}

TEST(Manifest, TableTwoGridHasTwelveExperiments) {
    std::vector<ExperimentPoint> points = expand(parse_manifest_text(kTable2));
    ASSERT_EQ(points.size(), 12u);
    std::set<std::string> ids;
    for (const ExperimentPoint &p : points) {
        ids.insert(p.experiment_id);
    }
    EXPECT_EQ(ids.size(), 12u);
    EXPECT_EQ(points.front().config.eta_up, 0.8);
    EXPECT_EQ(points.back().config.eta_up, 0.1);
}

TEST(Manifest, OutOfRangeNamesParameterAndLine) {
    try {
        parse_manifest_text("[experiment]\nstrategy = DQT\neta = 1.3\n", "m.qtd");
        FAIL() << "eta = 1.3 accepted";
    } catch (const ManifestError &e) {
        std::string what = e.what();
        EXPECT_NE(what.find("m.qtd:3:"), std::string::npos) << what;
        EXPECT_NE(what.find("eta"), std::string::npos) << what;
        EXPECT_EQ(e.line(), 3);
    }
}

TEST(Manifest, SchemaViolationsCarryLineNumbers) {
    struct Case {
        const char *text;
        int line;
    };
    const Case cases[] = {
        {"[experiment]\nstrategy = DQT\nbogus = 1\n", 3},
        {"[experiment]\nstrategy DQT\n", 2},
        {"[nowhere]\n", 1},
        {"strategy = DQT\n", 1},
        {"[experiment]\nstrategy = DQT\nstrategy = EQT\n", 3},
        {"[experiment]\nstrategy = DQT\neta = 0.5\n[sweep]\ntrials = 1, 2\n", 5},
        {"[experiment]\nstrategy = EQT\neta = 0.5\ndetector_kind = APD\n", 4},
        {"[experiment]\nstrategy = DQT\neta = 0.5\n[output]\nformats = pdf\n", 5},
    };
    for (const Case &c : cases) {
        try {
            parse_manifest_text(c.text);
            ADD_FAILURE() << "accepted:\n" << c.text;
        } catch (const ManifestError &e) {
            EXPECT_EQ(e.line(), c.line) << e.what();
        }
    }
}

TEST(Manifest, MissingRequiredAndMissingFile) {
    EXPECT_THROW(parse_manifest_text("[experiment]\neta = 0.5\n"), ManifestError);
    EXPECT_THROW(parse_manifest_text("[experiment]\nstrategy = EQT\neta_up = 0.5\n"), ManifestError);
    EXPECT_THROW(parse_manifest_text("[experiment]\nstrategy = DQT\neta_up_source = 0.5\n"),
                 ManifestError);
    EXPECT_THROW(parse_manifest("/nonexistent/manifest.qtd"), ManifestError);
}

TEST(Manifest, ReplicatesGetDistinctSeeds) {
    RunManifest m = parse_manifest_text(
        "[experiment]\nstrategy = DQT\neta = 0.5\n[output]\nreplicates = 3\n");
    std::vector<ExperimentPoint> points = expand(m);
    ASSERT_EQ(points.size(), 3u);
    std::set<std::uint64_t> seeds;
    for (const ExperimentPoint &p : points) {
        seeds.insert(p.config.master_seed);
        EXPECT_EQ(p.config.master_seed, derive_seed(0, p.parameter_key, p.replicate));
    }
    EXPECT_EQ(seeds.size(), 3u);
}

TEST(Execute, TableOneCsvShape) {
    TempDir dir;
    ExecuteReport report = run_text(kTable1, dir.path());
    ASSERT_EQ(report.exit_code, kExitOk);
    std::vector<std::string> rows = lines_of(slurp(dir.path() / "table_dqt.csv"));
    ASSERT_EQ(rows.size(), 4u);
    std::vector<std::string> header = split(rows[0]);
    const std::vector<std::string> leading = {"eta_up", "eta_down", "p_theory", "p_sim", "ci_lo", "ci_hi"};
    ASSERT_GE(header.size(), leading.size());
    EXPECT_TRUE(std::equal(leading.begin(), leading.end(), header.begin()));
    EXPECT_EQ(split(rows[1])[0], "0.8");
    EXPECT_EQ(split(rows[1])[2], "0.6400000000000001");
    EXPECT_FALSE(fs::exists(dir.path() / kPartialMarker));
    EXPECT_TRUE(fs::exists(dir.path() / "summary.json"));
}

TEST(Execute, SameSeedByteIdentical) {
    TempDir a, b;
    ASSERT_EQ(run_text(kTable2, a.path(), true).exit_code, kExitOk);
    ASSERT_EQ(run_text(kTable2, b.path(), true).exit_code, kExitOk);
    std::vector<fs::path> files;
    for (const auto &entry : fs::recursive_directory_iterator(a.path())) {
        if (entry.is_regular_file()) {
            files.push_back(fs::relative(entry.path(), a.path()));
        }
    }
    EXPECT_EQ(files.size(), 2u + 12u);
    for (const fs::path &rel : files) {
        EXPECT_EQ(slurp(a.path() / rel), slurp(b.path() / rel)) << rel;
    }
}

TEST(Execute, ParallelRunMatchesSerial) {
    TempDir a, b;
    ExecuteOptions options;
    options.quiet = true;
    std::ostringstream log, errors;
    options.out_dir = a.path();
    execute(parse_manifest_text(kTable2), options, log, errors);
    options.out_dir = b.path();
    options.jobs = 4;
    execute(parse_manifest_text(kTable2), options, log, errors);
    EXPECT_EQ(slurp(a.path() / "summary.json"), slurp(b.path() / "summary.json"));
}

TEST(Trace, EmptyRecordsGiveHeaderOnly) {
    std::ostringstream dqt, eqt;
    emit_trace(dqt, std::span<const DqtTrialRecord>{});
    emit_trace(eqt, std::span<const EqtTrialRecord>{});
    ASSERT_EQ(lines_of(dqt.str()).size(), 1u);
    ASSERT_EQ(lines_of(eqt.str()).size(), 1u);
    EXPECT_EQ(split(lines_of(dqt.str())[0]).size(), dqt_trace_columns().size());
    EXPECT_EQ(split(lines_of(eqt.str())[0]).size(), eqt_trace_columns().size());
}

TEST(Trace, OneRowPerTrialWithKnownLabels) {
    TempDir dir;
    std::string both = "[experiment]\nstrategy = DQT\neta = 0.6\nfiber_length_km = 10\n";
    ASSERT_EQ(run_text(both, dir.path(), true).exit_code, kExitOk);
    ASSERT_EQ(run_text(std::string(kTable2), dir.path(), true).exit_code, kExitOk);
    const std::set<std::string> dqt_labels = {"Success", "UpConversionFailed", "ChannelLoss",
                                              "DownConversionFailed"};
    const std::set<std::string> eqt_labels = {"TrueHerald", "FalseHerald", "NoClick",
                                              "RejectedMultiPhoton"};
    int files = 0;
    for (const auto &entry : fs::directory_iterator(dir.path() / "traces")) {
        std::string name = entry.path().filename().string();
        bool is_dqt = name.rfind("trace_dqt_", 0) == 0;
        std::vector<std::string> rows = lines_of(slurp(entry.path()));
        ASSERT_EQ(rows.size(), is_dqt ? 101u : 201u) << name;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            std::vector<std::string> cells = split(rows[i]);
            ASSERT_EQ(cells[0], std::to_string(i - 1));
            ASSERT_TRUE((is_dqt ? dqt_labels : eqt_labels).count(cells.back())) << cells.back();
        }
        ++files;
    }
    EXPECT_EQ(files, 13);
}

TEST(Trace, RoundTripRecoversSummaryProbability) {
    TempDir dir;
    std::string text = std::string(kTable2) + "[output]\nformats = summary-json, trace-csv\n";
    ASSERT_EQ(run_text(text, dir.path()).exit_code, kExitOk);
    nlohmann::json summary = nlohmann::json::parse(slurp(dir.path() / "summary.json"));
    ASSERT_EQ(summary["experiments"].size(), 12u);
    for (const auto &exp : summary["experiments"]) {
        std::string name = "trace_eqt_" + exp["experiment_id"].get<std::string>() + "_r" +
                           std::to_string(exp["replicate"].get<int>()) + ".csv";
        std::vector<std::string> rows = lines_of(slurp(dir.path() / "traces" / name));
        ASSERT_GT(rows.size(), 1u) << name;
        std::int64_t clicks = 0;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            std::string label = split(rows[i]).back();
            clicks += label == "TrueHerald" || label == "FalseHerald";
        }
        double recomputed = static_cast<double>(clicks) / static_cast<double>(rows.size() - 1);
        EXPECT_EQ(recomputed, exp["p_sim"].get<double>()) << name;
        EXPECT_EQ(clicks, exp["n_success"].get<std::int64_t>());
    }
}

TEST(Sweep, PermutingTheGridOnlyReordersRows) {
    TempDir a, b;
    std::string permuted = R"([experiment]
strategy = EQT
trials = 200

[sweep]
eta_d = 0.25, 1
detector_kind = SPD, PNRD
eta_up = 0.1, 0.8, 0.5
)";
    ASSERT_EQ(run_text(kTable2, a.path()).exit_code, kExitOk);
    ASSERT_EQ(run_text(permuted, b.path()).exit_code, kExitOk);
    std::vector<std::string> ra = lines_of(slurp(a.path() / "table_eqt.csv"));
    std::vector<std::string> rb = lines_of(slurp(b.path() / "table_eqt.csv"));
    EXPECT_EQ(ra.front(), rb.front());
    EXPECT_NE(ra, rb);
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    EXPECT_EQ(ra, rb);
}

TEST(Numbers, ShortestRoundTrip) {
    for (double v : {0.1, 0.25, 1.0 / 3.0, 0.6400000000000001, 1e-17, 0.0}) {
        std::string s = format_number(v);
        double back = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        EXPECT_EQ(back, v) << s;
    }
    EXPECT_EQ(format_number(0.5), "0.5");
}

class AppTest : public ::testing::Test {
   protected:
    void SetUp() override {
        manifest_ = dir_.path() / "run.qtd";
        std::ofstream(manifest_) << "[experiment]\nstrategy = DQT\neta = 0.5\ntrials = 50\n";
        unsetenv(kOutputDirEnv);
    }
    void TearDown() override {
        unsetenv(kOutputDirEnv);
    }
    TempDir dir_;
    fs::path manifest_;
};

TEST_F(AppTest, ExitCodes) {
    fs::path out = dir_.path() / "out";
    EXPECT_EQ(app({manifest_.string(), "--out", out.string(), "--quiet"}), kExitOk);
    EXPECT_TRUE(fs::exists(out / "summary.json"));

    fs::path bad = dir_.path() / "bad.qtd";
    std::ofstream(bad) << "[experiment]\nstrategy = DQT\neta = 1.3\n";
    std::string err;
    EXPECT_EQ(app({bad.string(), "--out", out.string()}, &err), kExitConfigError);
    EXPECT_NE(err.find("eta"), std::string::npos);

    EXPECT_EQ(app({(dir_.path() / "missing.qtd").string()}), kExitConfigError);
    EXPECT_EQ(app({manifest_.string(), "--trials", "0"}), kExitConfigError);
    EXPECT_EQ(app({}), kExitConfigError);
    EXPECT_EQ(app({"--version"}), kExitOk);

    fs::path blocker = dir_.path() / "blocker";
    std::ofstream(blocker) << "file";
    EXPECT_EQ(app({manifest_.string(), "--out", (blocker / "sub").string(), "--quiet"}),
              kExitRuntimeFailure);
}

TEST_F(AppTest, OverridesApply) {
    fs::path out = dir_.path() / "out";
    ASSERT_EQ(app({manifest_.string(), "--out", out.string(), "--quiet", "--trials", "7",
                   "--seed", "42", "--trace"}),
              kExitOk);
    nlohmann::json s = nlohmann::json::parse(slurp(out / "summary.json"));
    EXPECT_EQ(s["experiments"][0]["trials"].get<int>(), 7);
    EXPECT_EQ(s["experiments"][0]["seed"].get<std::uint64_t>(),
              derive_seed(42, s["experiments"][0]["parameter_key"].get<std::string>(), 0));
    EXPECT_TRUE(fs::exists(out / "traces"));
}

TEST_F(AppTest, FlagBeatsEnvironment) {
    fs::path env_dir = dir_.path() / "from_env";
    fs::path flag_dir = dir_.path() / "from_flag";
    setenv(kOutputDirEnv, env_dir.c_str(), 1);
    ASSERT_EQ(app({manifest_.string(), "--quiet"}), kExitOk);
    EXPECT_TRUE(fs::exists(env_dir / "summary.json"));
    ASSERT_EQ(app({manifest_.string(), "--quiet", "--out", flag_dir.string()}), kExitOk);
    EXPECT_TRUE(fs::exists(flag_dir / "summary.json"));
}

TEST_F(AppTest, FailedRunLeavesPartialMarker) {
    fs::path out = dir_.path() / "out";
    fs::create_directories(out);
    std::ofstream(out / "traces") << "not a directory";
    EXPECT_EQ(app({manifest_.string(), "--out", out.string(), "--quiet", "--trace"}),
              kExitRuntimeFailure);
    EXPECT_TRUE(fs::exists(out / kPartialMarker));
}

}  // namespace
}  // namespace qtd::cli
