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

#include "qtd/analytics/compare.h"

namespace qtd {

ComparisonReport compare(const ResultsSummary &summary) {
    ComparisonReport report;
    report.theory = summary.theory;
    report.simulated = summary.simulated_probability;
    report.n = summary.n_ideal;
    report.ci95 = binomial_ci(summary.n_success, summary.n_ideal, 0.95);
    report.within_ci = report.ci95.contains(report.theory.value);
    report.z_score = binomial_z_score(report.simulated, report.theory.value, report.n);
    return report;
}

}  // namespace qtd
