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

#ifndef QTD_CORE_SIM_TIME_H_
#define QTD_CORE_SIM_TIME_H_

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace qtd {

/// Simulation clock reading in integer picoseconds since the start of a run.
class SimTime {
   public:
    using rep = std::int64_t;

    constexpr SimTime() = default;

    static constexpr SimTime from_ps(rep ps) {
        if (ps < 0) {
            throw std::invalid_argument("SimTime must be non-negative");
        }
        return SimTime(ps);
    }
    static constexpr SimTime max() {
        return SimTime(std::numeric_limits<rep>::max());
    }

    constexpr rep ps() const {
        return ps_;
    }

    /// Saturates at max() instead of overflowing.
    constexpr SimTime plus_ps(rep delta) const {
        if (delta < 0) {
            throw std::invalid_argument("SimTime offsets must be non-negative");
        }
        if (ps_ > std::numeric_limits<rep>::max() - delta) {
            return max();
        }
        return SimTime(ps_ + delta);
    }

    constexpr auto operator<=>(const SimTime &) const = default;

   private:
    constexpr explicit SimTime(rep ps) : ps_(ps) {
    }
    rep ps_ = 0;
};

inline constexpr SimTime::rep kPicosecondsPerMicrosecond = 1'000'000;

inline std::ostream &operator<<(std::ostream &out, SimTime t) {
    return out << t.ps() << "ps";
}

}  // namespace qtd

#endif  // QTD_CORE_SIM_TIME_H_
