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

#include "qtd/hardware/transducer.h"

#include <stdexcept>

namespace qtd {

Transducer::Transducer(double efficiency, ComponentId optical_receiver,
                       ComponentId microwave_receiver, double optical_wavelength_nm,
                       double microwave_wavelength_nm)
    : efficiency_(efficiency),
      optical_receiver_(optical_receiver),
      microwave_receiver_(microwave_receiver),
      optical_wavelength_nm_(optical_wavelength_nm),
      microwave_wavelength_nm_(microwave_wavelength_nm) {
    if (!(efficiency >= 0.0 && efficiency <= 1.0)) {
        throw std::invalid_argument("transducer efficiency must lie in [0, 1]");
    }
}

ConversionOutcome Transducer::convert(const Photon &photon, RandomStream &rand) const {
    bool converted = rand.bernoulli(efficiency_);
    if (!converted) {
        ComponentId port = photon.domain() == Domain::kMicrowave ? microwave_receiver_
                                                                 : optical_receiver_;
        return {false, photon, port};
    }
    if (photon.domain() == Domain::kMicrowave) {
        return {true, photon.converted(Domain::kOptical, optical_wavelength_nm_),
                optical_receiver_};
    }
    return {true, photon.converted(Domain::kMicrowave, microwave_wavelength_nm_),
            microwave_receiver_};
}

}  // namespace qtd
