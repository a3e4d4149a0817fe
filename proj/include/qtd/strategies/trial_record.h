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

#ifndef QTD_STRATEGIES_TRIAL_RECORD_H_
#define QTD_STRATEGIES_TRIAL_RECORD_H_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "qtd/core/sim_time.h"
#include "qtd/hardware/fock_detector.h"
#include "qtd/protocols/protocols.h"

namespace qtd {

/// A trial record whose fields contradict each other.
class InconsistentRecord : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

enum class DqtClass : std::uint8_t {
    kSuccess,
    kUpConversionFailed,
    kChannelLoss,
    kDownConversionFailed,
};
inline constexpr std::array<DqtClass, 4> kAllDqtClasses = {
    DqtClass::kSuccess, DqtClass::kUpConversionFailed, DqtClass::kChannelLoss,
    DqtClass::kDownConversionFailed};

enum class HeraldClass : std::uint8_t {
    kTrueHerald,           ///< exactly one conversion succeeded and a detector clicked
    kFalseHerald,          ///< both converted, yet the clicks look like one photon
    kNoClick,
    kRejectedMultiPhoton,  ///< PNRD saw two photons
};
inline constexpr std::array<HeraldClass, 4> kAllHeraldClasses = {
    HeraldClass::kTrueHerald, HeraldClass::kFalseHerald, HeraldClass::kNoClick,
    HeraldClass::kRejectedMultiPhoton};

std::string_view to_string(DqtClass c);
std::string_view to_string(HeraldClass c);

/// Ground truth of one direct-transduction period. Stages after the first
/// failure are never reached and stay empty.
struct DqtTrialRecord {
    std::int64_t trial_index = 0;
    SimTime time;
    bool up_source_ok = false;
    std::optional<bool> channel_survived;
    std::optional<bool> down_dest_ok;
    DqtClass classification = DqtClass::kUpConversionFailed;
};

/// Ground truth of one entanglement-based period. A *_survived field is set
/// iff the corresponding up-conversion succeeded.
struct EqtTrialRecord {
    std::int64_t trial_index = 0;
    SimTime time;
    bool up_source_ok = false;
    bool up_dest_ok = false;
    std::optional<bool> source_survived;
    std::optional<bool> dest_survived;
    MeasurementRecord detections;
    HeraldClass classification = HeraldClass::kNoClick;
};

/// First failing stage in order up -> channel -> down.
DqtClass classify_dqt(const DqtTrialRecord &record);

HeraldClass classify_eqt(const EqtTrialRecord &record, DetectorKind detector_kind);

/// Counted toward the click probability.
inline bool is_click(HeraldClass c) {
    return c == HeraldClass::kTrueHerald || c == HeraldClass::kFalseHerald;
}

}  // namespace qtd

#endif  // QTD_STRATEGIES_TRIAL_RECORD_H_
