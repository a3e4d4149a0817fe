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

#ifndef QTD_PROTOCOLS_PROTOCOLS_H_
#define QTD_PROTOCOLS_PROTOCOLS_H_

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtd/core/random_stream.h"
#include "qtd/hardware/fock_beam_splitter.h"
#include "qtd/hardware/fock_detector.h"
#include "qtd/hardware/optical_channel.h"
#include "qtd/hardware/transducer.h"
#include "qtd/hardware/transmon.h"
#include "qtd/protocols/messages.h"
#include "qtd/protocols/observer.h"

namespace qtd {

/// A protocol was attached to hardware it cannot drive.
class WiringError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

enum class ProtocolKind : std::uint8_t { kEmitting, kUpConversion, kDownConversion, kMeasurement };

std::string_view to_string(ProtocolKind kind);

struct ProtocolBinding {
    ProtocolKind protocol;
    std::string node;
    std::vector<ComponentId> attached_hardware;
};

/// Shared by every protocol of one network.
struct ProtocolContext {
    NetworkTimeline &timeline;
    std::vector<ProtocolObserver *> observers;

    template <typename F>
    void notify(F &&f) const {
        for (ProtocolObserver *o : observers) {
            f(*o);
        }
    }
};

/// Clicks and counts of the two BSM detectors for one trial.
struct MeasurementRecord {
    std::array<bool, 2> clicked{false, false};
    std::array<int, 2> detected_count{0, 0};

    bool any_click() const {
        return clicked[0] || clicked[1];
    }
    int total_detected() const {
        return detected_count[0] + detected_count[1];
    }
    bool operator==(const MeasurementRecord &) const = default;
};

/// Periodically fires a transmon and forwards its photon to the transmon's
/// receiver.
class EmittingProtocol {
   public:
    EmittingProtocol(ProtocolBinding binding, ProtocolContext &ctx, Transmon &transmon,
                     PhotonIdAllocator &ids);

    /// Schedules `trials` emissions at k * period_ps, k = 0..trials-1.
    std::vector<EventId> start(SimTime::rep period_ps, std::int64_t trials);

    void on_tick(const EmitTick &tick);

    const ProtocolBinding &binding() const {
        return binding_;
    }

   private:
    ProtocolBinding binding_;
    ProtocolContext &ctx_;
    Transmon &transmon_;
    PhotonIdAllocator &ids_;
};

/// Microwave -> optical at a transducer, then through the fiber attached to
/// its optical port. Failed photons leave through the microwave port, which
/// the topology wires to a detector (DQT) or an ancilla transmon (EQT).
class UpConversionProtocol {
   public:
    UpConversionProtocol(ProtocolBinding binding, ProtocolContext &ctx,
                         const Transducer &transducer, const OpticalChannel &channel,
                         RandomStream &conversion_rng, RandomStream &channel_rng);

    /// Handler for the transducer component.
    void on_photon(const Photon &photon);
    /// Handler for the channel component.
    void on_channel_entry(const Photon &photon);

    const ProtocolBinding &binding() const {
        return binding_;
    }

   private:
    ProtocolBinding binding_;
    ProtocolContext &ctx_;
    const Transducer &transducer_;
    const OpticalChannel &channel_;
    RandomStream &conversion_rng_;
    RandomStream &channel_rng_;
};

/// Optical -> microwave at the destination of a direct link.
class DownConversionProtocol {
   public:
    DownConversionProtocol(ProtocolBinding binding, ProtocolContext &ctx,
                           const Transducer &transducer, RandomStream &conversion_rng);

    void on_photon(const Photon &photon);

    const ProtocolBinding &binding() const {
        return binding_;
    }

   private:
    ProtocolBinding binding_;
    ProtocolContext &ctx_;
    const Transducer &transducer_;
    RandomStream &conversion_rng_;
};

/// BSM station: gathers coincident arrivals at the beam splitter, routes
/// them, and tallies what the two detectors report per trial.
class MeasurementProtocol {
   public:
    MeasurementProtocol(ProtocolBinding binding, ProtocolContext &ctx,
                        FockBeamSplitter &splitter, std::array<FockDetector *, 2> detectors,
                        RandomStream &routing_rng, std::array<RandomStream *, 2> detection_rngs);

    /// Handler for the beam splitter component.
    void on_splitter_event(const NetworkMessage &message);
    /// Handler for detector `index` (0 or 1).
    void on_detector_batch(int index, const DetectorBatch &batch);

    /// Zero record when nothing reached the detectors in that trial.
    MeasurementRecord collect(std::int64_t trial) const;

    const ProtocolBinding &binding() const {
        return binding_;
    }

   private:
    ProtocolBinding binding_;
    ProtocolContext &ctx_;
    FockBeamSplitter &splitter_;
    std::array<FockDetector *, 2> detectors_;
    RandomStream &routing_rng_;
    std::array<RandomStream *, 2> detection_rngs_;
    ComponentId splitter_id_;
    std::map<std::int64_t, MeasurementRecord> records_;
};

/// Terminal receivers: log the photon on the hardware and report the
/// terminal to observers.
void absorb_at_transmon(ProtocolContext &ctx, Transmon &transmon, const Photon &photon);
DetectionEvent absorb_at_detector(ProtocolContext &ctx, FockDetector &detector,
                                  const Photon &photon, RandomStream &rng);

}  // namespace qtd

#endif  // QTD_PROTOCOLS_PROTOCOLS_H_
