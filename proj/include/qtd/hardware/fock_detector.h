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

#ifndef QTD_HARDWARE_FOCK_DETECTOR_H_
#define QTD_HARDWARE_FOCK_DETECTOR_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qtd/core/random_stream.h"
#include "qtd/hardware/photon.h"

namespace qtd {

enum class DetectorKind : std::uint8_t { kSpd, kPnrd };

std::string_view to_string(DetectorKind kind);
std::optional<DetectorKind> parse_detector_kind(std::string_view text);

struct DetectionEvent {
    bool clicked = false;
    /// Exact multiplicity for PNRD, min(count, 1) for SPD.
    int detected_count = 0;
};

/// Threshold (SPD) or photon-number-resolving (PNRD) counter. No dark counts.
class FockDetector {
   public:
    FockDetector(DetectorKind kind, double efficiency, Domain accepted = Domain::kOptical);

    /// One draw per incident photon. Incident photons must be in the
    /// accepted domain.
    DetectionEvent detect(std::span<const Photon> incident, RandomStream &rand);

    DetectorKind kind() const {
        return kind_;
    }
    double efficiency() const {
        return efficiency_;
    }
    std::uint64_t total_clicks() const {
        return total_clicks_;
    }
    /// histogram()[k] = number of detect() calls that reported k photons.
    const std::vector<std::uint64_t> &histogram() const {
        return histogram_;
    }

   private:
    DetectorKind kind_;
    double efficiency_;
    Domain accepted_;
    std::uint64_t total_clicks_ = 0;
    std::vector<std::uint64_t> histogram_;
};

}  // namespace qtd

#endif  // QTD_HARDWARE_FOCK_DETECTOR_H_
