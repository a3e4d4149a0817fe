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

#ifndef QTD_STRATEGIES_RESULTS_H_
#define QTD_STRATEGIES_RESULTS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtd/analytics/statistics.h"
#include "qtd/analytics/theory.h"
#include "qtd/core/timeline.h"
#include "qtd/strategies/experiment_config.h"
#include "qtd/strategies/trial_record.h"

namespace qtd {

struct ResultsSummary {
    ExperimentConfig config;
    /// Ideal count: one transfer (DQT) or herald (EQT) per period.
    std::int64_t n_ideal = 0;
    /// Successful transfers (DQT) or clicks counted as heralds (EQT).
    std::int64_t n_success = 0;
    double simulated_probability = 0.0;
    double theoretical_probability = 0.0;
    TheoryPoint theory;
    Interval ci95;
    /// Every class label of the strategy, including empty ones.
    std::map<std::string, std::int64_t> class_histogram;

    std::int64_t count(std::string_view label) const;
};

ResultsSummary summarize(const ExperimentConfig &config, std::span<const DqtTrialRecord> trials);
ResultsSummary summarize(const ExperimentConfig &config, std::span<const EqtTrialRecord> trials);

template <typename Record>
struct ExperimentResult {
    ResultsSummary summary;
    std::vector<Record> trials;
    RunStats run;
};

using DqtResult = ExperimentResult<DqtTrialRecord>;
using EqtResult = ExperimentResult<EqtTrialRecord>;

}  // namespace qtd

#endif  // QTD_STRATEGIES_RESULTS_H_
