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

#ifndef QTD_ANALYTICS_STATISTICS_H_
#define QTD_ANALYTICS_STATISTICS_H_

#include <cstdint>

namespace qtd {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    bool contains(double x) const {
        return lo <= x && x <= hi;
    }
    double half_width() const {
        return 0.5 * (hi - lo);
    }
};

/// Two-sided standard normal quantile for the given coverage, e.g.
/// 0.95 -> 1.959964.
double two_sided_z(double confidence);

/// Wilson score interval for a binomial proportion. The bounds are exactly 0
/// when successes == 0 and exactly 1 when successes == n.
Interval binomial_ci(std::int64_t successes, std::int64_t n, double confidence = 0.95);

/// (simulated - theory) / sqrt(theory (1 - theory) / n). With zero variance
/// the score is 0 on an exact match and +/-infinity otherwise.
double binomial_z_score(double simulated, double theory, std::int64_t n);

}  // namespace qtd

#endif  // QTD_ANALYTICS_STATISTICS_H_
