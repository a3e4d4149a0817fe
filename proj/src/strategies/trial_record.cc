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

#include "qtd/strategies/trial_record.h"

#include <string>

namespace qtd {

std::string_view to_string(DqtClass c) {
    switch (c) {
        case DqtClass::kSuccess:
            return "Success";
        case DqtClass::kUpConversionFailed:
            return "UpConversionFailed";
        case DqtClass::kChannelLoss:
            return "ChannelLoss";
        case DqtClass::kDownConversionFailed:
            return "DownConversionFailed";
    }
    return "?";
}

std::string_view to_string(HeraldClass c) {
    switch (c) {
        case HeraldClass::kTrueHerald:
            return "TrueHerald";
        case HeraldClass::kFalseHerald:
            return "FalseHerald";
        case HeraldClass::kNoClick:
            return "NoClick";
        case HeraldClass::kRejectedMultiPhoton:
            return "RejectedMultiPhoton";
    }
    return "?";
}

DqtClass classify_dqt(const DqtTrialRecord &r) {
    auto bad = [&](const char *why) {
        return InconsistentRecord("DQT trial " + std::to_string(r.trial_index) + ": " + why);
    };
    if (!r.up_source_ok) {
        if (r.channel_survived || r.down_dest_ok) {
            throw bad("stages recorded after a failed up-conversion");
        }
        return DqtClass::kUpConversionFailed;
    }
    if (!r.channel_survived) {
        throw bad("converted photon has no channel outcome");
    }
    if (!*r.channel_survived) {
        if (r.down_dest_ok) {
            throw bad("down-conversion recorded for a photon lost in the fiber");
        }
        return DqtClass::kChannelLoss;
    }
    if (!r.down_dest_ok) {
        throw bad("arrived photon has no down-conversion outcome");
    }
    return *r.down_dest_ok ? DqtClass::kSuccess : DqtClass::kDownConversionFailed;
}

HeraldClass classify_eqt(const EqtTrialRecord &r, DetectorKind kind) {
    auto bad = [&](const std::string &why) {
        return InconsistentRecord("EQT trial " + std::to_string(r.trial_index) + ": " + why);
    };
    if (r.source_survived.has_value() != r.up_source_ok ||
        r.dest_survived.has_value() != r.up_dest_ok) {
        throw bad("channel outcome present iff the photon was converted");
    }
    const MeasurementRecord &m = r.detections;
    int arrived = static_cast<int>(r.source_survived.value_or(false)) +
                  static_cast<int>(r.dest_survived.value_or(false));
    for (int port = 0; port < 2; ++port) {
        int count = m.detected_count[static_cast<std::size_t>(port)];
        bool clicked = m.clicked[static_cast<std::size_t>(port)];
        if (count < 0 || clicked != (count > 0)) {
            throw bad("detector " + std::to_string(port) + " click flag disagrees with its count");
        }
        if (kind == DetectorKind::kSpd && count > 1) {
            throw bad("SPD reported a photon number");
        }
    }
    if (m.clicked[0] && m.clicked[1]) {
        // A single photon reaches one port, and a coincident pair bunches.
        throw bad("both BSM detectors clicked");
    }
    if (m.total_detected() > arrived) {
        throw bad("more photons detected than reached the BSM node");
    }

    int converted = static_cast<int>(r.up_source_ok) + static_cast<int>(r.up_dest_ok);
    if (!m.any_click()) {
        return HeraldClass::kNoClick;
    }
    if (converted == 1) {
        return HeraldClass::kTrueHerald;
    }
    // converted == 2, since a click needs an arriving photon.
    if (kind == DetectorKind::kSpd) {
        return HeraldClass::kFalseHerald;
    }
    return m.total_detected() >= 2 ? HeraldClass::kRejectedMultiPhoton : HeraldClass::kFalseHerald;
}

}  // namespace qtd
