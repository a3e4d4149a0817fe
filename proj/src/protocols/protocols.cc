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

#include "qtd/protocols/protocols.h"

#include <string>
#include <utility>

namespace qtd {

namespace {

void require_kind(const ProtocolBinding &b, ProtocolKind kind, std::size_t hardware) {
    if (b.protocol != kind) {
        throw WiringError("binding for node '" + b.node + "' names protocol " +
                          std::string(to_string(b.protocol)) + ", expected " +
                          std::string(to_string(kind)));
    }
    if (b.attached_hardware.size() != hardware) {
        throw WiringError(std::string(to_string(kind)) + " protocol at '" + b.node + "' needs " +
                          std::to_string(hardware) + " attached components");
    }
}

}  // namespace

std::string_view to_string(ProtocolKind kind) {
    switch (kind) {
        case ProtocolKind::kEmitting:
            return "emitting";
        case ProtocolKind::kUpConversion:
            return "up_conversion";
        case ProtocolKind::kDownConversion:
            return "down_conversion";
        case ProtocolKind::kMeasurement:
            return "measurement";
    }
    return "?";
}

EmittingProtocol::EmittingProtocol(ProtocolBinding binding, ProtocolContext &ctx,
                                   Transmon &transmon, PhotonIdAllocator &ids)
    : binding_(std::move(binding)), ctx_(ctx), transmon_(transmon), ids_(ids) {
    require_kind(binding_, ProtocolKind::kEmitting, 1);
    if (!transmon_.receiver()) {
        throw WiringError("emitting transmon at '" + binding_.node + "' has no receiver");
    }
}

std::vector<EventId> EmittingProtocol::start(SimTime::rep period_ps, std::int64_t trials) {
    if (trials <= 0) {
        throw std::invalid_argument("emitting protocol needs at least one trial");
    }
    if (period_ps <= 0) {
        throw std::invalid_argument("emission period must be positive");
    }
    std::vector<EventId> ids;
    ids.reserve(static_cast<std::size_t>(trials));
    for (std::int64_t k = 0; k < trials; ++k) {
        ids.push_back(ctx_.timeline.schedule(SimTime::from_ps(k * period_ps),
                                             binding_.attached_hardware[0], EmitTick{k}));
    }
    return ids;
}

void EmittingProtocol::on_tick(const EmitTick &tick) {
    SimTime now = ctx_.timeline.now();
    Photon photon = transmon_.emit(now, tick.trial, ids_);
    ctx_.notify([&](ProtocolObserver &o) { o.on_emission(photon); });
    ctx_.timeline.schedule(now, *transmon_.receiver(), PhotonDelivery{photon});
}

UpConversionProtocol::UpConversionProtocol(ProtocolBinding binding, ProtocolContext &ctx,
                                           const Transducer &transducer,
                                           const OpticalChannel &channel,
                                           RandomStream &conversion_rng,
                                           RandomStream &channel_rng)
    : binding_(std::move(binding)),
      ctx_(ctx),
      transducer_(transducer),
      channel_(channel),
      conversion_rng_(conversion_rng),
      channel_rng_(channel_rng) {
    require_kind(binding_, ProtocolKind::kUpConversion, 2);
    if (transducer_.optical_receiver() != binding_.attached_hardware[1]) {
        throw WiringError("up-conversion at '" + binding_.node +
                          "': transducer optical port is not the bound channel");
    }
}

void UpConversionProtocol::on_photon(const Photon &photon) {
    if (photon.domain() != Domain::kMicrowave) {
        throw std::invalid_argument("up-conversion at '" + binding_.node +
                                    "' received an optical photon");
    }
    ConversionOutcome outcome = transducer_.convert(photon, conversion_rng_);
    ctx_.notify([&](ProtocolObserver &o) { o.on_conversion(photon, outcome); });
    ctx_.timeline.schedule(ctx_.timeline.now(), outcome.destination,
                           PhotonDelivery{outcome.out_photon});
}

void UpConversionProtocol::on_channel_entry(const Photon &photon) {
    SimTime now = ctx_.timeline.now();
    ChannelOutcome outcome = channel_.transmit(photon, now, channel_rng_);
    ctx_.notify([&](ProtocolObserver &o) { o.on_channel(photon, outcome); });
    if (outcome.survived) {
        ctx_.timeline.schedule(outcome.arrival_time, channel_.receiver(), PhotonDelivery{photon});
    } else {
        ctx_.notify([&](ProtocolObserver &o) { o.on_terminal(photon, Terminal::kChannelLoss, now); });
    }
}

DownConversionProtocol::DownConversionProtocol(ProtocolBinding binding, ProtocolContext &ctx,
                                               const Transducer &transducer,
                                               RandomStream &conversion_rng)
    : binding_(std::move(binding)),
      ctx_(ctx),
      transducer_(transducer),
      conversion_rng_(conversion_rng) {
    require_kind(binding_, ProtocolKind::kDownConversion, 1);
}

void DownConversionProtocol::on_photon(const Photon &photon) {
    if (photon.domain() != Domain::kOptical) {
        throw std::invalid_argument("down-conversion at '" + binding_.node +
                                    "' received a microwave photon");
    }
    // Ancilla photons only exist in the entanglement-based topology, which
    // never down-converts.
    if (photon.origin() != PhotonOrigin::kInformationQubit) {
        throw WiringError("down-conversion at '" + binding_.node + "' received an " +
                          std::string(to_string(photon.origin())) + " photon");
    }
    ConversionOutcome outcome = transducer_.convert(photon, conversion_rng_);
    ctx_.notify([&](ProtocolObserver &o) { o.on_conversion(photon, outcome); });
    ctx_.timeline.schedule(ctx_.timeline.now(), outcome.destination,
                           PhotonDelivery{outcome.out_photon});
}

MeasurementProtocol::MeasurementProtocol(ProtocolBinding binding, ProtocolContext &ctx,
                                         FockBeamSplitter &splitter,
                                         std::array<FockDetector *, 2> detectors,
                                         RandomStream &routing_rng,
                                         std::array<RandomStream *, 2> detection_rngs)
    : binding_(std::move(binding)),
      ctx_(ctx),
      splitter_(splitter),
      detectors_(detectors),
      routing_rng_(routing_rng),
      detection_rngs_(detection_rngs) {
    require_kind(binding_, ProtocolKind::kMeasurement, 3);
    splitter_id_ = binding_.attached_hardware[0];
    for (int port = 0; port < 2; ++port) {
        if (splitter_.receiver(port) != binding_.attached_hardware[1 + port]) {
            throw WiringError("measurement at '" + binding_.node +
                              "': beam splitter port " + std::to_string(port) +
                              " does not feed the bound detector");
        }
        if (detectors_[port] == nullptr || detection_rngs_[port] == nullptr) {
            throw WiringError("measurement at '" + binding_.node + "' is missing a detector");
        }
    }
}

void MeasurementProtocol::on_splitter_event(const NetworkMessage &message) {
    if (const auto *delivery = std::get_if<PhotonDelivery>(&message)) {
        auto closes = splitter_.admit(delivery->photon, ctx_.timeline.now());
        if (closes) {
            ctx_.timeline.schedule(*closes, splitter_id_, WindowClose{});
        }
        return;
    }
    if (!std::holds_alternative<WindowClose>(message)) {
        throw std::logic_error("beam splitter received an unexpected message");
    }
    std::vector<Photon> photons = splitter_.close_window();
    std::vector<int> ports = splitter_.route(photons, routing_rng_);
    std::array<DetectorBatch, 2> batches;
    for (std::size_t i = 0; i < photons.size(); ++i) {
        batches[static_cast<std::size_t>(ports[i])].photons.push_back(photons[i]);
    }
    for (int port = 0; port < 2; ++port) {
        auto &batch = batches[static_cast<std::size_t>(port)];
        if (!batch.photons.empty()) {
            ctx_.timeline.schedule(ctx_.timeline.now(), splitter_.receiver(port),
                                   std::move(batch));
        }
    }
}

void MeasurementProtocol::on_detector_batch(int index, const DetectorBatch &batch) {
    if (batch.photons.empty()) {
        return;
    }
    std::int64_t trial = batch.photons.front().trial();
    for (const Photon &p : batch.photons) {
        if (p.trial() != trial) {
            throw std::logic_error("photons of different trials share a coincidence window");
        }
    }
    auto slot = static_cast<std::size_t>(index);
    DetectionEvent event = detectors_.at(slot)->detect(batch.photons, *detection_rngs_[slot]);
    MeasurementRecord &record = records_[trial];
    record.clicked[slot] = record.clicked[slot] || event.clicked;
    record.detected_count[slot] += event.detected_count;
    SimTime now = ctx_.timeline.now();
    for (const Photon &p : batch.photons) {
        ctx_.notify([&](ProtocolObserver &o) { o.on_terminal(p, Terminal::kDetector, now); });
    }
}

MeasurementRecord MeasurementProtocol::collect(std::int64_t trial) const {
    auto it = records_.find(trial);
    return it == records_.end() ? MeasurementRecord{} : it->second;
}

void absorb_at_transmon(ProtocolContext &ctx, Transmon &transmon, const Photon &photon) {
    SimTime now = ctx.timeline.now();
    transmon.receive(now, photon);
    ctx.notify([&](ProtocolObserver &o) { o.on_terminal(photon, Terminal::kTransmon, now); });
}

DetectionEvent absorb_at_detector(ProtocolContext &ctx, FockDetector &detector,
                                  const Photon &photon, RandomStream &rng) {
    SimTime now = ctx.timeline.now();
    DetectionEvent event = detector.detect(std::span<const Photon>(&photon, 1), rng);
    ctx.notify([&](ProtocolObserver &o) { o.on_terminal(photon, Terminal::kDetector, now); });
    return event;
}

}  // namespace qtd
