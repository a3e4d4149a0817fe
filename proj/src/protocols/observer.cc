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

#include "qtd/protocols/observer.h"

#include <string>

namespace qtd {

std::string_view to_string(Terminal terminal) {
    switch (terminal) {
        case Terminal::kDetector:
            return "detector";
        case Terminal::kTransmon:
            return "transmon";
        case Terminal::kChannelLoss:
            return "channel_loss";
    }
    return "?";
}

void PhotonLedger::on_emission(const Photon &photon) {
    auto [it, inserted] = entries_.try_emplace(photon.id());
    if (!inserted) {
        orphan_problems_.push_back("photon " + std::to_string(photon.id()) + " emitted twice");
        return;
    }
    it->second.trial = photon.trial();
    it->second.emitted_domain = photon.domain();
    it->second.current_domain = photon.domain();
}

PhotonLedger::Entry &PhotonLedger::known(const Photon &photon, const char *what) {
    auto it = entries_.find(photon.id());
    if (it == entries_.end()) {
        orphan_problems_.push_back(std::string(what) + " of unknown photon " +
                                   std::to_string(photon.id()));
        it = entries_.try_emplace(photon.id()).first;
        it->second.trial = photon.trial();
        it->second.current_domain = photon.domain();
    }
    Entry &e = it->second;
    if (photon.trial() != e.trial) {
        e.problems.push_back("trial index changed");
    }
    if (photon.domain() != e.current_domain) {
        e.problems.push_back(std::string("domain changed outside a conversion before ") + what);
    }
    if (e.terminals > 0) {
        e.problems.push_back(std::string(what) + " after terminal");
    }
    return e;
}

void PhotonLedger::on_conversion(const Photon &in, const ConversionOutcome &outcome) {
    Entry &e = known(in, "conversion");
    bool flipped = outcome.out_photon.domain() != in.domain();
    if (flipped != outcome.converted) {
        e.problems.push_back("domain flip disagrees with conversion outcome");
    }
    if (outcome.out_photon.id() != in.id()) {
        e.problems.push_back("conversion changed photon id");
    }
    ++e.conversions;
    e.current_domain = outcome.out_photon.domain();
}

void PhotonLedger::on_channel(const Photon &photon, const ChannelOutcome &) {
    Entry &e = known(photon, "channel transit");
    if (photon.domain() != Domain::kOptical) {
        e.problems.push_back("non-optical photon in fiber");
    }
}

void PhotonLedger::on_terminal(const Photon &photon, Terminal terminal, SimTime time) {
    Entry &e = known(photon, "terminal");
    ++e.terminals;
    e.terminal = terminal;
    e.terminal_time = time;
}

std::vector<std::string> PhotonLedger::audit() const {
    std::vector<std::string> out = orphan_problems_;
    for (const auto &[id, e] : entries_) {
        std::string prefix = "photon " + std::to_string(id) + ": ";
        if (e.terminals != 1) {
            out.push_back(prefix + std::to_string(e.terminals) + " terminal records");
        }
        for (const std::string &p : e.problems) {
            out.push_back(prefix + p);
        }
    }
    return out;
}

std::size_t PhotonLedger::terminal_count(Terminal terminal) const {
    std::size_t n = 0;
    for (const auto &[id, e] : entries_) {
        if (e.terminals > 0 && e.terminal == terminal) {
            ++n;
        }
    }
    return n;
}

}  // namespace qtd
