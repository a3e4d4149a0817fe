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

#include "qtd/cli/execute.h"

#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "qtd/strategies/dqt.h"
#include "qtd/strategies/eqt.h"

namespace qtd::cli {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << content;
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

}  // namespace

ExperimentOutcome run_point(const ExperimentPoint &point) {
    ExperimentOutcome outcome;
    outcome.point = point;
    if (point.config.strategy == Strategy::kDqt) {
        DqtResult r = run_dqt(point.config);
        outcome.summary = std::move(r.summary);
        outcome.trials = std::move(r.trials);
    } else {
        EqtResult r = run_eqt(point.config);
        outcome.summary = std::move(r.summary);
        outcome.trials = std::move(r.trials);
    }
    return outcome;
}

std::vector<ExperimentOutcome> run_points(const std::vector<ExperimentPoint> &points,
                                          unsigned jobs) {
    std::vector<ExperimentOutcome> outcomes(points.size());
    std::vector<std::exception_ptr> errors(points.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                outcomes[i] = run_point(points[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(points.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    for (std::exception_ptr &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return outcomes;
}

ExecuteReport execute(RunManifest manifest, const ExecuteOptions &options, std::ostream &log,
                      std::ostream &errors) {
    if (options.trials) {
        manifest.base.trials = *options.trials;
        try {
            manifest.base.validate();
        } catch (const ConfigError &e) {
            throw ManifestError(manifest.source, 0, std::string("--trials: ") + e.what());
        }
    }
    if (options.seed) {
        manifest.base.master_seed = *options.seed;
    }
    std::vector<ExperimentPoint> points = expand(manifest);
    if (options.trace) {
        manifest.formats.insert(OutputFormat::kTraceCsv);
    }

    ExecuteReport report;
    const fs::path &dir = options.out_dir;
    fs::path marker = dir / kPartialMarker;
    try {
        fs::create_directories(dir);
        write_file(marker, manifest.source + "\n");
    } catch (const std::exception &e) {
        errors << "error: output directory " << dir.string() << " is not writable: " << e.what()
            << '\n';
        report.exit_code = kExitRuntimeFailure;
        return report;
    }

    try {
        report.outcomes = run_points(points, options.jobs);

        auto emit = [&](const fs::path &path, const std::string &content) {
            write_file(path, content);
            report.files.push_back(path);
        };
        if (manifest.formats.count(OutputFormat::kSummaryJson)) {
            emit(dir / "summary.json", summary_json(report.outcomes).dump(2) + "\n");
        }
        if (manifest.formats.count(OutputFormat::kTableCsv)) {
            for (Strategy s : {Strategy::kDqt, Strategy::kEqt}) {
                bool any = false;
                for (const ExperimentOutcome &o : report.outcomes) {
                    any = any || o.point.config.strategy == s;
                }
                if (!any) {
                    continue;
                }
                std::ostringstream table;
                write_table(table, s, report.outcomes);
                emit(dir / (s == Strategy::kDqt ? "table_dqt.csv" : "table_eqt.csv"), table.str());
            }
        }
        if (manifest.formats.count(OutputFormat::kTraceCsv)) {
            fs::create_directories(dir / "traces");
            for (const ExperimentOutcome &o : report.outcomes) {
                std::ostringstream trace;
                std::visit([&](const auto &records) { emit_trace(trace, records); }, o.trials);
                emit(dir / "traces" / trace_filename(o), trace.str());
            }
        }
        if (!options.quiet) {
            for (const ExperimentOutcome &o : report.outcomes) {
                const ResultsSummary &s = o.summary;
                log << fmt::format("{} {:<60} p_sim={:.4f} p_theory={:.4f} ci95=[{:.4f}, {:.4f}]\n",
                                   to_string(o.point.config.strategy), o.point.parameter_key,
                                   s.simulated_probability, s.theoretical_probability,
                                   s.ci95.lo, s.ci95.hi);
            }
        }
        fs::remove(marker);
    } catch (const std::exception &e) {
        errors << "error: " << e.what() << '\n';
        report.exit_code = kExitRuntimeFailure;
    }
    return report;
}

}  // namespace qtd::cli
