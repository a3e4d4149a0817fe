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

#ifndef QTD_STRATEGIES_EXPERIMENT_CONFIG_H_
#define QTD_STRATEGIES_EXPERIMENT_CONFIG_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qtd/core/sim_time.h"
#include "qtd/hardware/fock_beam_splitter.h"
#include "qtd/hardware/fock_detector.h"
#include "qtd/hardware/optical_channel.h"

namespace qtd {

enum class Strategy : std::uint8_t {
    kDqt,  ///< direct quantum transduction
    kEqt,  ///< entanglement-based quantum transduction
};

std::string_view to_string(Strategy strategy);
std::optional<Strategy> parse_strategy(std::string_view text);

/// A configuration value is out of range. parameter() names the field.
class ConfigError : public std::invalid_argument {
   public:
    ConfigError(std::string parameter, const std::string &message)
        : std::invalid_argument(parameter + ": " + message), parameter_(std::move(parameter)) {
    }
    const std::string &parameter() const {
        return parameter_;
    }

   private:
    std::string parameter_;
};

struct ExperimentConfig {
    Strategy strategy = Strategy::kDqt;

    // DQT: up-conversion at the source, down-conversion at the destination.
    double eta_up_source = 1.0;
    double eta_down_dest = 1.0;

    // EQT: identical up-conversion efficiency at both ends.
    double eta_up = 1.0;
    DetectorKind detector_kind = DetectorKind::kPnrd;
    double eta_d = 1.0;

    /// Source-destination fiber length. EQT splits it into two equal arms.
    double fiber_length_km = 0.0;
    double attenuation_length_km = kDefaultAttenuationLengthKm;
    double propagation_delay_ps_per_km = kDefaultDelayPsPerKm;

    SimTime::rep period_ps = kPicosecondsPerMicrosecond;
    SimTime::rep coincidence_window_ps = kDefaultCoincidenceWindowPs;
    std::int64_t trials = 100;
    std::uint64_t master_seed = 0;

    /// Throws ConfigError naming the first offending field.
    void validate() const;
};

}  // namespace qtd

#endif  // QTD_STRATEGIES_EXPERIMENT_CONFIG_H_
