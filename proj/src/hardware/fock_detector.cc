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

#include "qtd/hardware/fock_detector.h"

#include <algorithm>
#include <stdexcept>

namespace qtd {

std::string_view to_string(DetectorKind kind) {
    return kind == DetectorKind::kSpd ? "SPD" : "PNRD";
}

std::optional<DetectorKind> parse_detector_kind(std::string_view text) {
    if (text == "SPD" || text == "spd") {
        return DetectorKind::kSpd;
    }
    if (text == "PNRD" || text == "pnrd") {
        return DetectorKind::kPnrd;
    }
    return std::nullopt;
}

FockDetector::FockDetector(DetectorKind kind, double efficiency, Domain accepted)
    : kind_(kind), efficiency_(efficiency), accepted_(accepted), histogram_(1, 0) {
    if (!(efficiency >= 0.0 && efficiency <= 1.0)) {
        throw std::invalid_argument("detector efficiency must lie in [0, 1]");
    }
}

DetectionEvent FockDetector::detect(std::span<const Photon> incident, RandomStream &rand) {
    int count = 0;
    for (const Photon &p : incident) {
        if (p.domain() != accepted_) {
            throw std::invalid_argument("detector received a photon outside its domain");
        }
        if (rand.bernoulli(efficiency_)) {
            ++count;
        }
    }
    DetectionEvent event;
    event.clicked = count >= 1;
    event.detected_count = kind_ == DetectorKind::kPnrd ? count : std::min(count, 1);

    auto bucket = static_cast<std::size_t>(event.detected_count);
    if (histogram_.size() <= bucket) {
        histogram_.resize(bucket + 1, 0);
    }
    ++histogram_[bucket];
    if (event.clicked) {
        ++total_clicks_;
    }
    return event;
}

}  // namespace qtd
