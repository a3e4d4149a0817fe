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

#include "qtd/analytics/statistics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

namespace qtd {

double two_sided_z(double confidence) {
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw std::invalid_argument("confidence must lie in (0, 1)");
    }
    boost::math::normal_distribution<double> standard;
    return boost::math::quantile(standard, 0.5 + 0.5 * confidence);
}

Interval binomial_ci(std::int64_t successes, std::int64_t n, double confidence) {
    if (n <= 0) {
        throw std::invalid_argument("binomial_ci needs n > 0");
    }
    if (successes < 0 || successes > n) {
        throw std::invalid_argument("binomial_ci needs 0 <= successes <= n");
    }
    double z = two_sided_z(confidence);
    double nn = static_cast<double>(n);
    double p = static_cast<double>(successes) / nn;
    double z2 = z * z;
    double denom = 1.0 + z2 / nn;
    double center = (p + z2 / (2.0 * nn)) / denom;
    double half = z / denom * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
    Interval ci{std::max(0.0, center - half), std::min(1.0, center + half)};
    if (successes == 0) {
        ci.lo = 0.0;
    }
    if (successes == n) {
        ci.hi = 1.0;
    }
    return ci;
}

double binomial_z_score(double simulated, double theory, std::int64_t n) {
    if (n <= 0) {
        throw std::invalid_argument("binomial_z_score needs n > 0");
    }
    double variance = theory * (1.0 - theory) / static_cast<double>(n);
    double diff = simulated - theory;
    if (variance <= 0.0) {
        if (diff == 0.0) {
            return 0.0;
        }
        return diff > 0.0 ? std::numeric_limits<double>::infinity()
                          : -std::numeric_limits<double>::infinity();
    }
    return diff / std::sqrt(variance);
}

}  // namespace qtd
