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

#ifndef QTD_HARDWARE_OPTICAL_CHANNEL_H_
#define QTD_HARDWARE_OPTICAL_CHANNEL_H_

#include "qtd/core/random_stream.h"
#include "qtd/core/timeline.h"
#include "qtd/hardware/photon.h"

namespace qtd {

inline constexpr double kDefaultAttenuationLengthKm = 22.0;
inline constexpr double kDefaultDelayPsPerKm = 5000.0;

struct ChannelOutcome {
    bool survived;
    /// When the photon reaches the far end. Set even if it was lost, as the
    /// time it would have arrived.
    SimTime arrival_time;
};

/// Fiber segment with exponential loss exp(-length / attenuation_length).
class OpticalChannel {
   public:
    OpticalChannel(double length_km, ComponentId receiver,
                   double attenuation_length_km = kDefaultAttenuationLengthKm,
                   double delay_ps_per_km = kDefaultDelayPsPerKm);

    /// Consumes exactly one draw. Throws std::invalid_argument for microwave
    /// photons.
    ChannelOutcome transmit(const Photon &photon, SimTime send_time, RandomStream &rand) const;

    double survival_probability() const;
    SimTime::rep propagation_delay_ps() const;

    double length_km() const {
        return length_km_;
    }
    double attenuation_length_km() const {
        return attenuation_length_km_;
    }
    ComponentId receiver() const {
        return receiver_;
    }

   private:
    double length_km_;
    ComponentId receiver_;
    double attenuation_length_km_;
    double delay_ps_per_km_;
};

}  // namespace qtd

#endif  // QTD_HARDWARE_OPTICAL_CHANNEL_H_
