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

#ifndef QTD_HARDWARE_TRANSMON_H_
#define QTD_HARDWARE_TRANSMON_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "qtd/core/timeline.h"
#include "qtd/hardware/photon.h"

namespace qtd {

struct Reception {
    SimTime time;
    std::uint64_t photon_id;
};

/// Superconducting qubit acting as microwave photon emitter and receiver.
class Transmon {
   public:
    Transmon(std::optional<ComponentId> receiver, PhotonOrigin origin,
             double wavelength_nm = kMicrowaveWavelengthNm)
        : receiver_(receiver), origin_(origin), wavelength_nm_(wavelength_nm) {
    }

    /// Generates exactly one microwave photon. Delivery to receiver() is the
    /// caller's job.
    Photon emit(SimTime time, std::int64_t trial, PhotonIdAllocator &ids) const {
        return Photon(ids.next(), Domain::kMicrowave, wavelength_nm_, time, trial, origin_);
    }

    /// Logs an incoming microwave photon; rejects optical ones.
    void receive(SimTime time, const Photon &photon);

    std::optional<ComponentId> receiver() const {
        return receiver_;
    }
    const std::vector<Reception> &received_log() const {
        return received_;
    }
    double wavelength_nm() const {
        return wavelength_nm_;
    }

   private:
    std::optional<ComponentId> receiver_;
    PhotonOrigin origin_;
    double wavelength_nm_;
    std::vector<Reception> received_;
};

}  // namespace qtd

#endif  // QTD_HARDWARE_TRANSMON_H_
