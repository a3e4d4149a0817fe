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

#include "qtd/hardware/transmon.h"

#include <stdexcept>

namespace qtd {

void Transmon::receive(SimTime time, const Photon &photon) {
    if (photon.domain() != Domain::kMicrowave) {
        throw std::invalid_argument("transmon received an optical photon");
    }
    received_.push_back({time, photon.id()});
}

}  // namespace qtd
