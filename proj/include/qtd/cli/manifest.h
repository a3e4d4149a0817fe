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

#ifndef QTD_CLI_MANIFEST_H_
#define QTD_CLI_MANIFEST_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qtd/strategies/experiment_config.h"

namespace qtd::cli {

/// Malformed or out-of-range manifest. what() carries "source:line: ...".
class ManifestError : public std::runtime_error {
   public:
    ManifestError(const std::string &source, int line, const std::string &message);
    int line() const {
        return line_;
    }

   private:
    int line_;
};

enum class OutputFormat { kSummaryJson, kTableCsv, kTraceCsv };

std::string_view to_string(OutputFormat format);

struct SweepAxis {
    std::string parameter;
    std::vector<std::string> values;
    int line = 0;
};

/// A run description:
///
///   [experiment]   scalar parameters (strategy, eta_*, fiber_length_km, ...)
///   [sweep]        comma-separated value lists; the grid is their product
///   [output]       dir, formats, replicates
struct RunManifest {
    std::string source = "<manifest>";
    ExperimentConfig base;
    std::vector<SweepAxis> sweep;
    std::optional<std::string> output_dir;
    std::set<OutputFormat> formats = {OutputFormat::kSummaryJson, OutputFormat::kTableCsv};
    int replicate_count = 1;
};

/// One cell of the sweep grid for one replicate.
struct ExperimentPoint {
    ExperimentConfig config;
    int replicate = 0;
    /// Canonical physics-parameter tuple; seeds and ids derive from it, not
    /// from the grid position.
    std::string parameter_key;
    std::string experiment_id;
};

RunManifest parse_manifest(const std::filesystem::path &path);
RunManifest parse_manifest_text(std::string_view text, std::string source = "<manifest>");

/// Names accepted in [experiment] and [sweep].
const std::vector<std::string_view> &manifest_parameters();

std::string parameter_key(const ExperimentConfig &config);

/// Seed of one experiment: mixes the manifest seed, the parameter tuple and
/// the replicate index.
std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view parameter_key,
                          int replicate);

/// Cartesian product of the sweep axes (first axis varies slowest) times
/// replicates. Each point gets its derived seed in config.master_seed.
std::vector<ExperimentPoint> expand(const RunManifest &manifest);

}  // namespace qtd::cli

#endif  // QTD_CLI_MANIFEST_H_
