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

#ifndef QTD_CLI_EXECUTE_H_
#define QTD_CLI_EXECUTE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <vector>

#include "qtd/cli/manifest.h"
#include "qtd/cli/output.h"

namespace qtd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitRuntimeFailure = 2;

/// Present in the output directory while a run is in progress, and left
/// behind when it does not finish.
inline constexpr const char *kPartialMarker = "RUN_INCOMPLETE";

struct ExecuteOptions {
    std::filesystem::path out_dir;
    std::optional<std::int64_t> trials;
    std::optional<std::uint64_t> seed;
    bool trace = false;
    bool quiet = false;
    unsigned jobs = 1;
};

struct ExecuteReport {
    int exit_code = kExitOk;
    std::vector<ExperimentOutcome> outcomes;
    std::vector<std::filesystem::path> files;
};

/// Runs one experiment point.
ExperimentOutcome run_point(const ExperimentPoint &point);

/// Runs all points, in parallel when jobs > 1. Output order follows the
/// input order regardless of scheduling.
std::vector<ExperimentOutcome> run_points(const std::vector<ExperimentPoint> &points,
                                          unsigned jobs);

/// Applies overrides, expands the grid, runs it and writes the requested
/// artifacts. Configuration problems surface as ManifestError; everything
/// else is reported through exit_code.
ExecuteReport execute(RunManifest manifest, const ExecuteOptions &options, std::ostream &log,
                      std::ostream &errors);

}  // namespace qtd::cli

#endif  // QTD_CLI_EXECUTE_H_
