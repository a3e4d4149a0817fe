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

#include "qtd/strategies/eqt.h"

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace qtd {

namespace {

constexpr std::array<const char *, 2> kNodeNames = {"source", "destination"};

std::string stream_name(std::size_t node, const char *suffix) {
    return std::string(kNodeNames[node]) + suffix;
}

const Photon &delivered(const NetworkTimeline::EventType &event, const NetworkTimeline &timeline) {
    if (const auto *d = std::get_if<PhotonDelivery>(&event.payload)) {
        return d->photon;
    }
    throw std::logic_error("component '" + timeline.name(event.target) +
                           "' expected a photon delivery");
}

}  // namespace

class EqtNetwork::Recorder : public ProtocolObserver {
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
        if (in.origin() == PhotonOrigin::kSourceAncilla) {
            at(in).up_source_ok = outcome.converted;
        } else {
            at(in).up_dest_ok = outcome.converted;
        }
    }
    void on_channel(const Photon &p, const ChannelOutcome &outcome) override {
        if (p.origin() == PhotonOrigin::kSourceAncilla) {
            at(p).source_survived = outcome.survived;
        } else {
            at(p).dest_survived = outcome.survived;
        }
    }

    std::vector<EqtTrialRecord> records_;

   private:
    EqtTrialRecord &at(const Photon &p) {
        return records_.at(static_cast<std::size_t>(p.trial()));
    }
};

EqtNetwork::Ids EqtNetwork::register_components(NetworkTimeline &t) {
    Ids ids;
    for (std::size_t n = 0; n < 2; ++n) {
        std::string prefix = kNodeNames[n];
        ids.node[n].emitter = t.add_component(prefix + ".ancilla_transmon");
        ids.node[n].transducer = t.add_component(prefix + ".transducer");
        ids.node[n].receiver = t.add_component(prefix + ".receiver_transmon");
        ids.node[n].arm = t.add_component(prefix + ".arm");
    }
    ids.splitter = t.add_component("bsm.beam_splitter");
    ids.detector[0] = t.add_component("bsm.detector0");
    ids.detector[1] = t.add_component("bsm.detector1");
    return ids;
}

EqtNetwork::EndNode::EndNode(const ExperimentConfig &config, const NodeIds &ids,
                             ComponentId splitter, PhotonOrigin origin)
    : emitter(ids.transducer, origin),
      transducer(config.eta_up, ids.arm, ids.receiver),
      receiver(std::nullopt, origin),
      arm(config.fiber_length_km / 2.0, splitter, config.attenuation_length_km,
          config.propagation_delay_ps_per_km) {
}

EqtNetwork::EqtNetwork(const ExperimentConfig &config, ExperimentOptions options)
    : config_(config),
      ids_(register_components(timeline_)),
      streams_(config.master_seed),
      node_{EndNode(config, ids_.node[0], ids_.splitter, PhotonOrigin::kSourceAncilla),
            EndNode(config, ids_.node[1], ids_.splitter, PhotonOrigin::kDestinationAncilla)},
      splitter_(ids_.detector, config.coincidence_window_ps),
      detectors_{FockDetector(config.detector_kind, config.eta_d),
                 FockDetector(config.detector_kind, config.eta_d)},
      recorder_(std::make_unique<Recorder>(config.trials)),
      ledger_(options.audit ? std::make_unique<PhotonLedger>() : nullptr),
      ctx_{timeline_, {}},
      emitting_{EmittingProtocol({ProtocolKind::kEmitting, "source", {ids_.node[0].emitter}},
                                 ctx_, node_[0].emitter, photon_ids_),
                EmittingProtocol({ProtocolKind::kEmitting, "destination", {ids_.node[1].emitter}},
                                 ctx_, node_[1].emitter, photon_ids_)},
      up_conversion_{
          UpConversionProtocol(
              {ProtocolKind::kUpConversion, "source", {ids_.node[0].transducer, ids_.node[0].arm}},
              ctx_, node_[0].transducer, node_[0].arm,
              streams_.stream(stream_name(0, ".transducer.upconv")),
              streams_.stream(stream_name(0, ".arm.loss"))),
          UpConversionProtocol({ProtocolKind::kUpConversion,
                                "destination",
                                {ids_.node[1].transducer, ids_.node[1].arm}},
                               ctx_, node_[1].transducer, node_[1].arm,
                               streams_.stream(stream_name(1, ".transducer.upconv")),
                               streams_.stream(stream_name(1, ".arm.loss")))},
      measurement_({ProtocolKind::kMeasurement,
                    "bsm",
                    {ids_.splitter, ids_.detector[0], ids_.detector[1]}},
                   ctx_, splitter_, {&detectors_[0], &detectors_[1]},
                   streams_.stream("bsm.beam_splitter.route"),
                   {&streams_.stream("bsm.detector0.detect"),
                    &streams_.stream("bsm.detector1.detect")}) {
    ctx_.observers.push_back(recorder_.get());
    if (ledger_) {
        ctx_.observers.push_back(ledger_.get());
    }
    install_handlers();

    for (std::size_t i = 0; i < timeline_.component_count(); ++i) {
        topology_.components.push_back(timeline_.name(ComponentId{static_cast<std::uint32_t>(i)}));
    }
    for (const NodeIds &n : ids_.node) {
        topology_.links.push_back({n.emitter, n.transducer, std::nullopt});
        topology_.links.push_back({n.transducer, ids_.splitter, n.arm});
        topology_.links.push_back({n.transducer, n.receiver, std::nullopt});
    }
    topology_.links.push_back({ids_.splitter, ids_.detector[0], std::nullopt});
    topology_.links.push_back({ids_.splitter, ids_.detector[1], std::nullopt});
    topology_.streams = streams_.ids();
}

EqtNetwork::~EqtNetwork() = default;

void EqtNetwork::install_handlers() {
    for (std::size_t n = 0; n < 2; ++n) {
        const NodeIds &ids = ids_.node[n];
        timeline_.set_handler(ids.emitter, [this, n](const NetworkTimeline::EventType &e) {
            const auto *tick = std::get_if<EmitTick>(&e.payload);
            if (tick == nullptr) {
                throw std::logic_error("ancilla transmon only handles emission ticks");
            }
            emitting_[n].on_tick(*tick);
        });
        timeline_.set_handler(ids.transducer, [this, n](const NetworkTimeline::EventType &e) {
            up_conversion_[n].on_photon(delivered(e, timeline_));
        });
        timeline_.set_handler(ids.arm, [this, n](const NetworkTimeline::EventType &e) {
            up_conversion_[n].on_channel_entry(delivered(e, timeline_));
        });
        timeline_.set_handler(ids.receiver, [this, n](const NetworkTimeline::EventType &e) {
            absorb_at_transmon(ctx_, node_[n].receiver, delivered(e, timeline_));
        });
    }
    timeline_.set_handler(ids_.splitter, [this](const NetworkTimeline::EventType &e) {
        measurement_.on_splitter_event(e.payload);
    });
    for (int d = 0; d < 2; ++d) {
        timeline_.set_handler(ids_.detector[static_cast<std::size_t>(d)],
                              [this, d](const NetworkTimeline::EventType &e) {
                                  const auto *batch = std::get_if<DetectorBatch>(&e.payload);
                                  if (batch == nullptr) {
                                      throw std::logic_error("BSM detector expects a batch");
                                  }
                                  measurement_.on_detector_batch(d, *batch);
                              });
    }
}

std::unique_ptr<EqtNetwork> EqtNetwork::build(const ExperimentConfig &config,
                                              ExperimentOptions options) {
    config.validate();
    if (config.strategy != Strategy::kEqt) {
        throw ConfigError("strategy", "EQT topology needs an EQT configuration");
    }
    return std::unique_ptr<EqtNetwork>(new EqtNetwork(config, options));
}

EqtResult EqtNetwork::run() {
    if (ran_) {
        throw std::logic_error("an EQT network can only run once");
    }
    ran_ = true;
    for (EmittingProtocol &p : emitting_) {
        p.start(config_.period_ps, config_.trials);
    }
    SimTime horizon = SimTime::from_ps((config_.trials - 1) * config_.period_ps)
                          .plus_ps(node_[0].arm.propagation_delay_ps())
                          .plus_ps(config_.coincidence_window_ps);
    EqtResult result;
    result.run = timeline_.run_until(horizon);
    if (timeline_.pending() != 0) {
        throw std::logic_error("EQT run left events past the horizon");
    }
    result.trials = std::move(recorder_->records_);
    for (EqtTrialRecord &r : result.trials) {
        r.detections = measurement_.collect(r.trial_index);
        r.classification = classify_eqt(r, config_.detector_kind);
    }
    result.summary = summarize(config_, result.trials);
    return result;
}

std::unique_ptr<EqtNetwork> build_eqt(const ExperimentConfig &config, ExperimentOptions options) {
    return EqtNetwork::build(config, options);
}

EqtResult run_eqt(const ExperimentConfig &config, ExperimentOptions options) {
    return build_eqt(config, options)->run();
}

}  // namespace qtd
