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

#ifndef QTD_HARDWARE_PHOTON_H_
#define QTD_HARDWARE_PHOTON_H_

#include <cstdint>
#include <string_view>

#include "qtd/core/sim_time.h"

namespace qtd {

enum class Domain : std::uint8_t { kMicrowave, kOptical };

enum class PhotonOrigin : std::uint8_t { kSourceAncilla, kDestinationAncilla, kInformationQubit };

std::string_view to_string(Domain domain);
std::string_view to_string(PhotonOrigin origin);

inline constexpr double kOpticalWavelengthNm = 1550.0;
/// 5 GHz transmon line.
inline constexpr double kMicrowaveWavelengthNm = 5.99584916e7;

class Transducer;

/// A single flying qubit carrier. Only a Transducer can change its domain.
class Photon {
   public:
    Photon(std::uint64_t photon_id, Domain domain, double wavelength_nm, SimTime emit_time,
           std::int64_t trial_index, PhotonOrigin origin)
        : id_(photon_id),
          domain_(domain),
          wavelength_nm_(wavelength_nm),
          emit_time_(emit_time),
          trial_(trial_index),
          origin_(origin) {
    }

    std::uint64_t id() const {
        return id_;
    }
    Domain domain() const {
        return domain_;
    }
    double wavelength_nm() const {
        return wavelength_nm_;
    }
    SimTime emit_time() const {
        return emit_time_;
    }
    std::int64_t trial() const {
        return trial_;
    }
    PhotonOrigin origin() const {
        return origin_;
    }

   private:
    friend class Transducer;
    Photon converted(Domain domain, double wavelength_nm) const {
        Photon out = *this;
        out.domain_ = domain;
        out.wavelength_nm_ = wavelength_nm;
        return out;
    }

    std::uint64_t id_;
    Domain domain_;
    double wavelength_nm_;
    SimTime emit_time_;
    std::int64_t trial_;
    PhotonOrigin origin_;
};

/// Hands out photon ids; one allocator per experiment.
class PhotonIdAllocator {
   public:
    std::uint64_t next() {
        return next_++;
    }
    std::uint64_t issued() const {
        return next_;
    }

   private:
    std::uint64_t next_ = 0;
};

}  // namespace qtd

#endif  // QTD_HARDWARE_PHOTON_H_
