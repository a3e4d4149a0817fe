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

#include "qtd/core/random_stream.h"

#include <utility>

namespace qtd {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(a) ^ (b + 0x632BE59BD9B4E019ULL));
}

RandomStream::RandomStream(std::uint64_t master_seed, std::string stream_id)
    : id_(std::move(stream_id)), engine_(mix_seed(master_seed, fnv1a64(id_))) {
}

double RandomStream::draw_unit() {
    ++draws_;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

RandomStream &StreamRegistry::stream(const std::string &stream_id) {
    auto it = streams_.find(stream_id);
    if (it == streams_.end()) {
        it = streams_.try_emplace(stream_id, master_seed_, stream_id).first;
    }
    return it->second;
}

std::vector<std::string> StreamRegistry::ids() const {
    std::vector<std::string> out;
    out.reserve(streams_.size());
    for (const auto &[id, stream] : streams_) {
        out.push_back(id);
    }
    return out;
}

}  // namespace qtd
