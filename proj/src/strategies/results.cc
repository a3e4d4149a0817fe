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

#include "qtd/strategies/results.h"

#include <stdexcept>

namespace qtd {

namespace {

template <typename Record, typename Classes, typename IsSuccess>
ResultsSummary summarize_impl(const ExperimentConfig &config, std::span<const Record> trials,
                              const Classes &classes, IsSuccess is_success) {
    if (trials.empty()) {
        throw std::invalid_argument("cannot summarize an experiment without trials");
    }
    ResultsSummary s;
    s.config = config;
    s.n_ideal = static_cast<std::int64_t>(trials.size());
    for (auto c : classes) {
        s.class_histogram[std::string(to_string(c))] = 0;
    }
    for (const Record &r : trials) {
        ++s.class_histogram[std::string(to_string(r.classification))];
        if (is_success(r.classification)) {
            ++s.n_success;
        }
    }
    s.simulated_probability = static_cast<double>(s.n_success) / static_cast<double>(s.n_ideal);
    s.theory = theory_for(config);
    s.theoretical_probability = s.theory.value;
    s.ci95 = binomial_ci(s.n_success, s.n_ideal, 0.95);
    return s;
}

}  // namespace

std::int64_t ResultsSummary::count(std::string_view label) const {
    auto it = class_histogram.find(std::string(label));
    return it == class_histogram.end() ? 0 : it->second;
}

ResultsSummary summarize(const ExperimentConfig &config, std::span<const DqtTrialRecord> trials) {
    return summarize_impl(config, trials, kAllDqtClasses,
                          [](DqtClass c) { return c == DqtClass::kSuccess; });
}

ResultsSummary summarize(const ExperimentConfig &config, std::span<const EqtTrialRecord> trials) {
    return summarize_impl(config, trials, kAllHeraldClasses, is_click);
}

}  // namespace qtd
