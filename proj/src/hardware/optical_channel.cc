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

#include "qtd/hardware/optical_channel.h"

#include <cmath>
#include <stdexcept>

namespace qtd {

OpticalChannel::OpticalChannel(double length_km, ComponentId receiver,
                               double attenuation_length_km, double delay_ps_per_km)
    : length_km_(length_km),
      receiver_(receiver),
      attenuation_length_km_(attenuation_length_km),
      delay_ps_per_km_(delay_ps_per_km) {
    if (!(length_km >= 0.0) || !std::isfinite(length_km)) {
        throw std::invalid_argument("channel length must be a finite value >= 0");
    }
    if (!(attenuation_length_km > 0.0)) {
        throw std::invalid_argument("attenuation length must be > 0");
    }
    if (!(delay_ps_per_km >= 0.0)) {
        throw std::invalid_argument("propagation delay must be >= 0");
    }
}

double OpticalChannel::survival_probability() const {
    return std::exp(-length_km_ / attenuation_length_km_);
}

SimTime::rep OpticalChannel::propagation_delay_ps() const {
    return std::llround(length_km_ * delay_ps_per_km_);
}

ChannelOutcome OpticalChannel::transmit(const Photon &photon, SimTime send_time,
                                        RandomStream &rand) const {
    if (photon.domain() != Domain::kOptical) {
        throw std::invalid_argument("microwave photon routed into an optical fiber");
    }
    bool survived = rand.bernoulli(survival_probability());
    return {survived, send_time.plus_ps(propagation_delay_ps())};
}

}  // namespace qtd
