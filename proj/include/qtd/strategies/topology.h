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

#ifndef QTD_STRATEGIES_TOPOLOGY_H_
#define QTD_STRATEGIES_TOPOLOGY_H_

#include <optional>
#include <string>
#include <vector>

#include "qtd/core/timeline.h"

namespace qtd {

/// Directed receiver relation between two hardware components, optionally
/// carried by a fiber.
struct Link {
    ComponentId from;
    ComponentId to;
    std::optional<ComponentId> via;
};

struct Topology {
    /// Indexed by ComponentId::index.
    std::vector<std::string> components;
    std::vector<Link> links;
    std::vector<std::string> streams;

    std::optional<ComponentId> find(const std::string &name) const;
};

struct ExperimentOptions {
    /// Keep a PhotonLedger for conservation audits.
    bool audit = false;
};

}  // namespace qtd

#endif  // QTD_STRATEGIES_TOPOLOGY_H_
