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

#ifndef QTD_CLI_OUTPUT_H_
#define QTD_CLI_OUTPUT_H_

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "qtd/cli/manifest.h"
#include "qtd/strategies/results.h"
#include "qtd/strategies/trial_record.h"

namespace qtd::cli {

struct ExperimentOutcome {
    ExperimentPoint point;
    ResultsSummary summary;
    std::variant<std::vector<DqtTrialRecord>, std::vector<EqtTrialRecord>> trials;
};

// Fixed CSV headers. Numbers are written in shortest round-trip form, so a
// value parsed back from a file is bit-identical to the one written.
const std::vector<std::string_view> &dqt_table_columns();
const std::vector<std::string_view> &eqt_table_columns();
const std::vector<std::string_view> &dqt_trace_columns();
const std::vector<std::string_view> &eqt_trace_columns();

std::string format_number(double value);

/// One row per outcome of the given strategy; other strategies are skipped.
void write_table(std::ostream &out, Strategy strategy, std::span<const ExperimentOutcome> outcomes);

/// One row per trial. An empty span yields the header line only.
void emit_trace(std::ostream &out, std::span<const DqtTrialRecord> records);
void emit_trace(std::ostream &out, std::span<const EqtTrialRecord> records);

std::string trace_filename(const ExperimentOutcome &outcome);

nlohmann::json summary_json(std::span<const ExperimentOutcome> outcomes);

}  // namespace qtd::cli

#endif  // QTD_CLI_OUTPUT_H_
