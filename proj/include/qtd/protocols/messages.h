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

#ifndef QTD_PROTOCOLS_MESSAGES_H_
#define QTD_PROTOCOLS_MESSAGES_H_

#include <cstdint>
#include <variant>
#include <vector>

#include "qtd/core/timeline.h"
#include "qtd/hardware/photon.h"

namespace qtd {

/// Asks a transmon to emit the photon of one period.
struct EmitTick {
    std::int64_t trial;
};

/// A photon handed from one component to the next.
struct PhotonDelivery {
    Photon photon;
};

/// The beam splitter's coincidence window has elapsed.
struct WindowClose {};

/// All photons leaving one beam splitter port within one window.
struct DetectorBatch {
    std::vector<Photon> photons;
};

using NetworkMessage = std::variant<EmitTick, PhotonDelivery, WindowClose, DetectorBatch>;
using NetworkTimeline = Timeline<NetworkMessage>;

}  // namespace qtd

#endif  // QTD_PROTOCOLS_MESSAGES_H_
