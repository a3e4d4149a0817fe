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

#ifndef QTD_HARDWARE_TRANSDUCER_H_
#define QTD_HARDWARE_TRANSDUCER_H_

#include "qtd/core/random_stream.h"
#include "qtd/core/timeline.h"
#include "qtd/hardware/photon.h"

namespace qtd {

struct ConversionOutcome {
    bool converted;
    Photon out_photon;
    /// Receiver matching out_photon's domain.
    ComponentId destination;
};

/// Bi-directional microwave/optical converter with a single efficiency.
///
/// A microwave input is up-converted, an optical input is down-converted.
/// On failure the photon leaves unchanged through the receiver of its own
/// domain, which acts as the failure port.
class Transducer {
   public:
    Transducer(double efficiency, ComponentId optical_receiver, ComponentId microwave_receiver,
               double optical_wavelength_nm = kOpticalWavelengthNm,
               double microwave_wavelength_nm = kMicrowaveWavelengthNm);

    /// Consumes exactly one draw from `rand`.
    ConversionOutcome convert(const Photon &photon, RandomStream &rand) const;

    double efficiency() const {
        return efficiency_;
    }
    ComponentId optical_receiver() const {
        return optical_receiver_;
    }
    ComponentId microwave_receiver() const {
        return microwave_receiver_;
    }

   private:
    double efficiency_;
    ComponentId optical_receiver_;
    ComponentId microwave_receiver_;
    double optical_wavelength_nm_;
    double microwave_wavelength_nm_;
};

}  // namespace qtd

#endif  // QTD_HARDWARE_TRANSDUCER_H_
