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

#ifndef QTD_HARDWARE_FOCK_BEAM_SPLITTER_H_
#define QTD_HARDWARE_FOCK_BEAM_SPLITTER_H_

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "qtd/core/random_stream.h"
#include "qtd/core/timeline.h"
#include "qtd/hardware/photon.h"

namespace qtd {

inline constexpr SimTime::rep kDefaultCoincidenceWindowPs = 1000;

/// Balanced 50:50 splitter in the photon-number basis.
///
/// Photons landing inside one coincidence window are treated as
/// indistinguishable: a pair bunches into a single output port
/// (Hong-Ou-Mandel).
class FockBeamSplitter {
   public:
    explicit FockBeamSplitter(std::array<ComponentId, 2> receivers,
                              SimTime::rep coincidence_window_ps = kDefaultCoincidenceWindowPs);

    /// Output port (0 or 1) for each photon, one draw total. One or two
    /// photons are accepted; more is a topology invariant violation and
    /// throws std::logic_error.
    std::vector<int> route(std::span<const Photon> arrivals, RandomStream &rand) const;

    /// Buffers an arrival. Returns the window close time when this arrival
    /// opened a new window, nullopt when it joined the open one.
    std::optional<SimTime> admit(const Photon &photon, SimTime now);

    /// Hands back the photons of the open window and resets the buffer.
    std::vector<Photon> close_window();

    bool window_open() const {
        return window_closes_.has_value();
    }
    ComponentId receiver(int port) const {
        return receivers_.at(static_cast<std::size_t>(port));
    }
    SimTime::rep coincidence_window_ps() const {
        return window_ps_;
    }

   private:
    std::array<ComponentId, 2> receivers_;
    SimTime::rep window_ps_;
    std::optional<SimTime> window_closes_;
    std::vector<Photon> buffered_;
};

}  // namespace qtd

#endif  // QTD_HARDWARE_FOCK_BEAM_SPLITTER_H_
