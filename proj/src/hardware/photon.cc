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

#include "qtd/hardware/photon.h"

namespace qtd {

std::string_view to_string(Domain domain) {
    switch (domain) {
        case Domain::kMicrowave:
            return "microwave";
        case Domain::kOptical:
            return "optical";
    }
    return "?";
}

std::string_view to_string(PhotonOrigin origin) {
    switch (origin) {
        case PhotonOrigin::kSourceAncilla:
            return "source_ancilla";
        case PhotonOrigin::kDestinationAncilla:
            return "destination_ancilla";
        case PhotonOrigin::kInformationQubit:
            return "information_qubit";
    }
    return "?";
}

}  // namespace qtd
