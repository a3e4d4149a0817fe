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

#include "qtd/hardware/fock_beam_splitter.h"

#include <stdexcept>
#include <string>

namespace qtd {

FockBeamSplitter::FockBeamSplitter(std::array<ComponentId, 2> receivers,
                                   SimTime::rep coincidence_window_ps)
    : receivers_(receivers), window_ps_(coincidence_window_ps) {
    if (coincidence_window_ps < 0) {
        throw std::invalid_argument("coincidence window must be >= 0");
    }
}

std::vector<int> FockBeamSplitter::route(std::span<const Photon> arrivals,
                                         RandomStream &rand) const {
    if (arrivals.empty()) {
        throw std::invalid_argument("beam splitter asked to route zero photons");
    }
    if (arrivals.size() > 2) {
        throw std::logic_error(std::to_string(arrivals.size()) +
                               " photons in one coincidence window");
    }
    for (const Photon &p : arrivals) {
        if (p.domain() != Domain::kOptical) {
            throw std::invalid_argument("beam splitter received a microwave photon");
        }
    }
    int port = rand.draw_unit() < 0.5 ? 0 : 1;
    return std::vector<int>(arrivals.size(), port);
}

std::optional<SimTime> FockBeamSplitter::admit(const Photon &photon, SimTime now) {
    buffered_.push_back(photon);
    if (window_closes_) {
        return std::nullopt;
    }
    window_closes_ = now.plus_ps(window_ps_);
    return window_closes_;
}

std::vector<Photon> FockBeamSplitter::close_window() {
    window_closes_.reset();
    std::vector<Photon> out;
    out.swap(buffered_);
    return out;
}

}  // namespace qtd
