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

#ifndef QTD_CLI_APP_H_
#define QTD_CLI_APP_H_

#include <ostream>

namespace qtd::cli {

/// Environment variable naming the default output directory.
inline constexpr const char *kOutputDirEnv = "QTD_OUTPUT_DIR";

/// Command-line entry point; returns the process exit code.
int run_app(int argc, char **argv, std::ostream &out, std::ostream &err);

}  // namespace qtd::cli

#endif  // QTD_CLI_APP_H_
