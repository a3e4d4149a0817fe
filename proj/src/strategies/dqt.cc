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

#include "qtd/strategies/dqt.h"

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace qtd {

std::optional<ComponentId> Topology::find(const std::string &name) const {
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i] == name) {
            return ComponentId{static_cast<std::uint32_t>(i)};
        }
    }
    return std::nullopt;
}

namespace {

const Photon &delivered(const NetworkTimeline::EventType &event, const NetworkTimeline &timeline) {
    if (const auto *d = std::get_if<PhotonDelivery>(&event.payload)) {
        return d->photon;
    }
    throw std::logic_error("component '" + timeline.name(event.target) +
                           "' expected a photon delivery");
}

}  // namespace

class DqtNetwork::Recorder : public ProtocolObserver {
   public:
    explicit Recorder(std::int64_t trials) : records_(static_cast<std::size_t>(trials)) {
        for (std::size_t i = 0; i < records_.size(); ++i) {
            records_[i].trial_index = static_cast<std::int64_t>(i);
        }
    }

    void on_emission(const Photon &p) override {
        at(p).time = p.emit_time();
    }
    void on_conversion(const Photon &in, const ConversionOutcome &outcome) override {
        if (in.domain() == Domain::kMicrowave) {
            at(in).up_source_ok = outcome.converted;
        } else {
            at(in).down_dest_ok = outcome.converted;
        }
    }
    void on_channel(const Photon &p, const ChannelOutcome &outcome) override {
        at(p).channel_survived = outcome.survived;
    }

    std::vector<DqtTrialRecord> records_;

   private:
    DqtTrialRecord &at(const Photon &p) {
        return records_.at(static_cast<std::size_t>(p.trial()));
    }
};

DqtNetwork::Ids DqtNetwork::register_components(NetworkTimeline &t) {
    Ids ids;
    ids.source_transmon = t.add_component("source.transmon");
    ids.source_transducer = t.add_component("source.transducer");
    ids.source_detector = t.add_component("source.microwave_detector");
    ids.fiber = t.add_component("fiber");
    ids.dest_transducer = t.add_component("destination.transducer");
    ids.dest_transmon = t.add_component("destination.transmon");
    ids.dest_detector = t.add_component("destination.optical_detector");
    return ids;
}

DqtNetwork::DqtNetwork(const ExperimentConfig &config, ExperimentOptions options)
    : config_(config),
      ids_(register_components(timeline_)),
      streams_(config.master_seed),
      source_transmon_(ids_.source_transducer, PhotonOrigin::kInformationQubit),
      source_transducer_(config.eta_up_source, ids_.fiber, ids_.source_detector),
      fiber_(config.fiber_length_km, ids_.dest_transducer, config.attenuation_length_km,
             config.propagation_delay_ps_per_km),
      source_detector_(DetectorKind::kPnrd, 1.0, Domain::kMicrowave),
      dest_transducer_(config.eta_down_dest, ids_.dest_detector, ids_.dest_transmon),
      dest_transmon_(std::nullopt, PhotonOrigin::kInformationQubit),
      dest_detector_(DetectorKind::kPnrd, 1.0, Domain::kOptical),
      recorder_(std::make_unique<Recorder>(config.trials)),
      ledger_(options.audit ? std::make_unique<PhotonLedger>() : nullptr),
      ctx_{timeline_, {}},
      emitting_({ProtocolKind::kEmitting, "source", {ids_.source_transmon}}, ctx_,
                source_transmon_, photon_ids_),
      up_conversion_({ProtocolKind::kUpConversion, "source", {ids_.source_transducer, ids_.fiber}},
                     ctx_, source_transducer_, fiber_,
                     streams_.stream("source.transducer.upconv"), streams_.stream("fiber.loss")),
      down_conversion_({ProtocolKind::kDownConversion, "destination", {ids_.dest_transducer}},
                       ctx_, dest_transducer_, streams_.stream("destination.transducer.downconv")) {
    ctx_.observers.push_back(recorder_.get());
    if (ledger_) {
        ctx_.observers.push_back(ledger_.get());
    }
    streams_.stream("source.microwave_detector.detect");
    streams_.stream("destination.optical_detector.detect");
    install_handlers();

    for (std::size_t i = 0; i < timeline_.component_count(); ++i) {
        topology_.components.push_back(timeline_.name(ComponentId{static_cast<std::uint32_t>(i)}));
    }
    topology_.links = {
        {ids_.source_transmon, ids_.source_transducer, std::nullopt},
        {ids_.source_transducer, ids_.dest_transducer, ids_.fiber},
        {ids_.source_transducer, ids_.source_detector, std::nullopt},
        {ids_.dest_transducer, ids_.dest_transmon, std::nullopt},
        {ids_.dest_transducer, ids_.dest_detector, std::nullopt},
    };
    topology_.streams = streams_.ids();
}

DqtNetwork::~DqtNetwork() = default;

void DqtNetwork::install_handlers() {
    timeline_.set_handler(ids_.source_transmon, [this](const NetworkTimeline::EventType &e) {
        const auto *tick = std::get_if<EmitTick>(&e.payload);
        if (tick == nullptr) {
            throw std::logic_error("source transmon only handles emission ticks");
        }
        emitting_.on_tick(*tick);
    });
    timeline_.set_handler(ids_.source_transducer, [this](const NetworkTimeline::EventType &e) {
        up_conversion_.on_photon(delivered(e, timeline_));
    });
    timeline_.set_handler(ids_.fiber, [this](const NetworkTimeline::EventType &e) {
        up_conversion_.on_channel_entry(delivered(e, timeline_));
    });
    timeline_.set_handler(ids_.source_detector, [this](const NetworkTimeline::EventType &e) {
        absorb_at_detector(ctx_, source_detector_, delivered(e, timeline_),
                           streams_.stream("source.microwave_detector.detect"));
    });
    timeline_.set_handler(ids_.dest_transducer, [this](const NetworkTimeline::EventType &e) {
        down_conversion_.on_photon(delivered(e, timeline_));
    });
    timeline_.set_handler(ids_.dest_transmon, [this](const NetworkTimeline::EventType &e) {
        absorb_at_transmon(ctx_, dest_transmon_, delivered(e, timeline_));
    });
    timeline_.set_handler(ids_.dest_detector, [this](const NetworkTimeline::EventType &e) {
        absorb_at_detector(ctx_, dest_detector_, delivered(e, timeline_),
                           streams_.stream("destination.optical_detector.detect"));
    });
}

std::unique_ptr<DqtNetwork> DqtNetwork::build(const ExperimentConfig &config,
                                              ExperimentOptions options) {
    config.validate();
    if (config.strategy != Strategy::kDqt) {
        throw ConfigError("strategy", "DQT topology needs a DQT configuration");
    }
    return std::unique_ptr<DqtNetwork>(new DqtNetwork(config, options));
}

DqtResult DqtNetwork::run() {
    if (ran_) {
        throw std::logic_error("a DQT network can only run once");
    }
    ran_ = true;
    emitting_.start(config_.period_ps, config_.trials);
    SimTime horizon = SimTime::from_ps((config_.trials - 1) * config_.period_ps)
                          .plus_ps(fiber_.propagation_delay_ps());
    DqtResult result;
    result.run = timeline_.run_until(horizon);
    if (timeline_.pending() != 0) {
        throw std::logic_error("DQT run left events past the horizon");
    }
    result.trials = std::move(recorder_->records_);
    for (DqtTrialRecord &r : result.trials) {
        r.classification = classify_dqt(r);
    }
    result.summary = summarize(config_, result.trials);
    return result;
}

std::unique_ptr<DqtNetwork> build_dqt(const ExperimentConfig &config, ExperimentOptions options) {
    return DqtNetwork::build(config, options);
}

DqtResult run_dqt(const ExperimentConfig &config, ExperimentOptions options) {
    return build_dqt(config, options)->run();
}

}  // namespace qtd
