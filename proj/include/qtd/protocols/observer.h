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

#ifndef QTD_PROTOCOLS_OBSERVER_H_
#define QTD_PROTOCOLS_OBSERVER_H_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qtd/hardware/fock_detector.h"
#include "qtd/hardware/optical_channel.h"
#include "qtd/hardware/photon.h"
#include "qtd/hardware/transducer.h"

namespace qtd {

/// Where a photon's journey ended.
enum class Terminal : std::uint8_t { kDetector, kTransmon, kChannelLoss };

std::string_view to_string(Terminal terminal);

/// Hooks fired by the protocols as photons move through the network.
class ProtocolObserver {
   public:
    virtual ~ProtocolObserver() = default;
    virtual void on_emission(const Photon &) {
    }
    virtual void on_conversion(const Photon & /*in*/, const ConversionOutcome &) {
    }
    virtual void on_channel(const Photon &, const ChannelOutcome &) {
    }
    virtual void on_terminal(const Photon &, Terminal, SimTime) {
    }
};

/// Audit trail of every photon: emission, domain changes, and terminal.
///
/// audit() reports violations of photon conservation (exactly one terminal
/// per emitted photon) and of domain conservation (the domain flips exactly
/// when a conversion succeeded).
class PhotonLedger : public ProtocolObserver {
   public:
    struct Entry {
        std::int64_t trial = -1;
        Domain emitted_domain = Domain::kMicrowave;
        Domain current_domain = Domain::kMicrowave;
        int conversions = 0;
        int terminals = 0;
        Terminal terminal = Terminal::kDetector;
        SimTime terminal_time;
        std::vector<std::string> problems;
    };

    void on_emission(const Photon &photon) override;
    void on_conversion(const Photon &in, const ConversionOutcome &outcome) override;
    void on_channel(const Photon &photon, const ChannelOutcome &outcome) override;
    void on_terminal(const Photon &photon, Terminal terminal, SimTime time) override;

    std::vector<std::string> audit() const;

    const std::map<std::uint64_t, Entry> &entries() const {
        return entries_;
    }
    std::size_t terminal_count(Terminal terminal) const;

   private:
    Entry &known(const Photon &photon, const char *what);

    std::map<std::uint64_t, Entry> entries_;
    std::vector<std::string> orphan_problems_;
};

}  // namespace qtd

#endif  // QTD_PROTOCOLS_OBSERVER_H_
