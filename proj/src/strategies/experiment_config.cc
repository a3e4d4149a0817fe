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

#include "qtd/strategies/experiment_config.h"

#include <cmath>
#include <limits>

namespace qtd {

namespace {

void check_probability(const char *name, double value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw ConfigError(name, "value " + std::to_string(value) + " is outside [0, 1]");
    }
}

void check_length(const char *name, double value) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
        throw ConfigError(name, "must be a finite value >= 0");
    }
}

}  // namespace

std::string_view to_string(Strategy strategy) {
    return strategy == Strategy::kDqt ? "DQT" : "EQT";
}

std::optional<Strategy> parse_strategy(std::string_view text) {
    if (text == "DQT" || text == "dqt") {
        return Strategy::kDqt;
    }
    if (text == "EQT" || text == "eqt") {
        return Strategy::kEqt;
    }
    return std::nullopt;
}

void ExperimentConfig::validate() const {
    check_probability("eta_up_source", eta_up_source);
    check_probability("eta_down_dest", eta_down_dest);
    check_probability("eta_up", eta_up);
    check_probability("eta_d", eta_d);
    check_length("fiber_length_km", fiber_length_km);
    if (!(attenuation_length_km > 0.0) || !std::isfinite(attenuation_length_km)) {
        throw ConfigError("attenuation_length_km", "must be a finite value > 0");
    }
    check_length("propagation_delay_ps_per_km", propagation_delay_ps_per_km);
    if (period_ps <= 0) {
        throw ConfigError("period_ps", "must be positive");
    }
    if (coincidence_window_ps < 0) {
        throw ConfigError("coincidence_window_ps", "must be >= 0");
    }
    if (strategy == Strategy::kEqt && coincidence_window_ps >= period_ps) {
        throw ConfigError("coincidence_window_ps", "must be shorter than period_ps");
    }
    if (trials < 1) {
        throw ConfigError("trials", "must be >= 1");
    }
    if (trials > std::numeric_limits<SimTime::rep>::max() / 4 / period_ps) {
        throw ConfigError("trials", "trials * period_ps overflows the simulation clock");
    }
}

}  // namespace qtd
