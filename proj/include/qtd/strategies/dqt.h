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

#ifndef QTD_STRATEGIES_DQT_H_
#define QTD_STRATEGIES_DQT_H_

#include <memory>
#include <optional>

#include "qtd/core/random_stream.h"
#include "qtd/hardware/fock_detector.h"
#include "qtd/hardware/optical_channel.h"
#include "qtd/hardware/transducer.h"
#include "qtd/hardware/transmon.h"
#include "qtd/protocols/messages.h"
#include "qtd/protocols/observer.h"
#include "qtd/protocols/protocols.h"
#include "qtd/strategies/experiment_config.h"
#include "qtd/strategies/results.h"
#include "qtd/strategies/topology.h"

namespace qtd {

/// Direct transduction link:
///
///   source:      transmon -> transducer -> fiber | microwave detector
///   destination: transducer -> transmon | optical detector
///
/// The information qubit itself is up-converted, sent through the fiber and
/// down-converted. Failure-port detectors are ideal and only log failures.
class DqtNetwork {
   public:
    /// Throws ConfigError for invalid or non-DQT configurations.
    static std::unique_ptr<DqtNetwork> build(const ExperimentConfig &config,
                                             ExperimentOptions options = {});

    DqtNetwork(const DqtNetwork &) = delete;
    DqtNetwork &operator=(const DqtNetwork &) = delete;
    ~DqtNetwork();

    /// Runs every period and classifies it. May be called once.
    DqtResult run();

    const Topology &topology() const {
        return topology_;
    }
    const ExperimentConfig &config() const {
        return config_;
    }
    const Transmon &source_transmon() const {
        return source_transmon_;
    }
    const Transmon &destination_transmon() const {
        return dest_transmon_;
    }
    const FockDetector &source_microwave_detector() const {
        return source_detector_;
    }
    const FockDetector &destination_optical_detector() const {
        return dest_detector_;
    }
    /// Null unless built with options.audit.
    const PhotonLedger *ledger() const {
        return ledger_.get();
    }
    const NetworkTimeline &timeline() const {
        return timeline_;
    }

   private:
    struct Ids {
        ComponentId source_transmon, source_transducer, source_detector, fiber;
        ComponentId dest_transducer, dest_transmon, dest_detector;
    };
    class Recorder;

    DqtNetwork(const ExperimentConfig &config, ExperimentOptions options);
    static Ids register_components(NetworkTimeline &timeline);
    void install_handlers();

    ExperimentConfig config_;
    NetworkTimeline timeline_;
    Ids ids_;
    StreamRegistry streams_;
    PhotonIdAllocator photon_ids_;

    Transmon source_transmon_;
    Transducer source_transducer_;
    OpticalChannel fiber_;
    FockDetector source_detector_;
    Transducer dest_transducer_;
    Transmon dest_transmon_;
    FockDetector dest_detector_;

    std::unique_ptr<Recorder> recorder_;
    std::unique_ptr<PhotonLedger> ledger_;
    ProtocolContext ctx_;
    EmittingProtocol emitting_;
    UpConversionProtocol up_conversion_;
    DownConversionProtocol down_conversion_;
    Topology topology_;
    bool ran_ = false;
};

std::unique_ptr<DqtNetwork> build_dqt(const ExperimentConfig &config,
                                      ExperimentOptions options = {});
DqtResult run_dqt(const ExperimentConfig &config, ExperimentOptions options = {});

}  // namespace qtd

#endif  // QTD_STRATEGIES_DQT_H_
