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

#ifndef QTD_ANALYTICS_COMPARE_H_
#define QTD_ANALYTICS_COMPARE_H_

#include <cstdint>

#include "qtd/analytics/statistics.h"
#include "qtd/analytics/theory.h"
#include "qtd/strategies/results.h"

namespace qtd {

struct ComparisonReport {
    TheoryPoint theory;
    double simulated = 0.0;
    std::int64_t n = 0;
    Interval ci95;
    /// theory.value lies inside ci95.
    bool within_ci = false;
    double z_score = 0.0;
};

ComparisonReport compare(const ResultsSummary &summary);

}  // namespace qtd

#endif  // QTD_ANALYTICS_COMPARE_H_
