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

#ifndef QTD_STRATEGIES_EQT_H_
#define QTD_STRATEGIES_EQT_H_

#include <array>
#include <memory>

#include "qtd/core/random_stream.h"
#include "qtd/hardware/fock_beam_splitter.h"
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

/// Entanglement-based link with a midpoint BSM station.
///
/// Each end node fires an ancilla transmon every period into a transducer.
/// A converted photon travels an arm of half the link length to the beam
/// splitter; an unconverted one is parked in the node's receiver transmon.
/// The BSM node routes coincident photons and counts detector clicks.
class EqtNetwork {
   public:
    static std::unique_ptr<EqtNetwork> build(const ExperimentConfig &config,
                                             ExperimentOptions options = {});

    EqtNetwork(const EqtNetwork &) = delete;
    EqtNetwork &operator=(const EqtNetwork &) = delete;
    ~EqtNetwork();

    EqtResult run();

    const Topology &topology() const {
        return topology_;
    }
    const ExperimentConfig &config() const {
        return config_;
    }
    const OpticalChannel &source_arm() const {
        return node_[0].arm;
    }
    const OpticalChannel &destination_arm() const {
        return node_[1].arm;
    }
    const Transmon &source_receiver_transmon() const {
        return node_[0].receiver;
    }
    const Transmon &destination_receiver_transmon() const {
        return node_[1].receiver;
    }
    const FockDetector &detector(int index) const {
        return detectors_.at(static_cast<std::size_t>(index));
    }
    const MeasurementProtocol &measurement() const {
        return measurement_;
    }
    const PhotonLedger *ledger() const {
        return ledger_.get();
    }

   private:
    struct NodeIds {
        ComponentId emitter, transducer, receiver, arm;
    };
    struct Ids {
        std::array<NodeIds, 2> node;
        ComponentId splitter;
        std::array<ComponentId, 2> detector;
    };
    struct EndNode {
        EndNode(const ExperimentConfig &config, const NodeIds &ids, ComponentId splitter,
                PhotonOrigin origin);
        Transmon emitter;
        Transducer transducer;
        Transmon receiver;
        OpticalChannel arm;
    };
    class Recorder;

    EqtNetwork(const ExperimentConfig &config, ExperimentOptions options);
    static Ids register_components(NetworkTimeline &timeline);
    void install_handlers();

    ExperimentConfig config_;
    NetworkTimeline timeline_;
    Ids ids_;
    StreamRegistry streams_;
    PhotonIdAllocator photon_ids_;

    std::array<EndNode, 2> node_;
    FockBeamSplitter splitter_;
    std::array<FockDetector, 2> detectors_;

    std::unique_ptr<Recorder> recorder_;
    std::unique_ptr<PhotonLedger> ledger_;
    ProtocolContext ctx_;
    std::array<EmittingProtocol, 2> emitting_;
    std::array<UpConversionProtocol, 2> up_conversion_;
    MeasurementProtocol measurement_;
    Topology topology_;
    bool ran_ = false;
};

std::unique_ptr<EqtNetwork> build_eqt(const ExperimentConfig &config,
                                      ExperimentOptions options = {});
EqtResult run_eqt(const ExperimentConfig &config, ExperimentOptions options = {});

}  // namespace qtd

#endif  // QTD_STRATEGIES_EQT_H_
