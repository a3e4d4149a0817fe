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

#include "qtd/cli/app.h"

#include <cstdlib>
#include <exception>

#include "CLI11.hpp"

#include "qtd/cli/execute.h"
#include "qtd/cli/manifest.h"

namespace qtd::cli {

int run_app(int argc, char **argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Discrete-event simulator of direct and entanglement-based quantum transduction"};
    app.set_version_flag("--version", QTD_VERSION);

    std::string manifest_path;
    std::string out_dir;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    bool trace = false;
    bool quiet = false;
    unsigned jobs = 1;

    app.add_option("manifest", manifest_path, "Run manifest")->required();
    app.add_option("--out", out_dir, "Output directory (default: manifest output.dir, then $" +
                                         std::string(kOutputDirEnv) + ", then ./qtd_results)");
    auto *trials_opt = app.add_option("--trials", trials, "Override the number of periods N")
                           ->check(CLI::PositiveNumber);
    auto *seed_opt = app.add_option("--seed", seed, "Override the master seed");
    app.add_flag("--trace", trace, "Write one per-trial trace file per experiment");
    app.add_flag("--quiet", quiet, "Suppress the per-experiment summary lines");
    app.add_option("--jobs", jobs, "Parallel experiments")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    ExecuteOptions options;
    options.trace = trace;
    options.quiet = quiet;
    options.jobs = jobs;
    if (trials_opt->count()) {
        options.trials = trials;
    }
    if (seed_opt->count()) {
        options.seed = seed;
    }

    try {
        RunManifest manifest = parse_manifest(manifest_path);
        if (!out_dir.empty()) {
            options.out_dir = out_dir;
        } else if (manifest.output_dir) {
            options.out_dir = *manifest.output_dir;
        } else if (const char *env = std::getenv(kOutputDirEnv); env && *env) {
            options.out_dir = env;
        } else {
            options.out_dir = "qtd_results";
        }
        ExecuteReport report = execute(std::move(manifest), options, out, err);
        return report.exit_code;
    } catch (const ManifestError &e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntimeFailure;
    }
}

}  // namespace qtd::cli
