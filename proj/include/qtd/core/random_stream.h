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

#ifndef QTD_CORE_RANDOM_STREAM_H_
#define QTD_CORE_RANDOM_STREAM_H_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace qtd {

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// FNV-1a, 64-bit.
std::uint64_t fnv1a64(std::string_view text);

/// Combines two 64-bit values into a well-mixed seed. Not commutative.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

/// A named, independently seeded uniform variate source.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard; variates are built from the top 53 bits so the draw sequence is
/// identical on every conforming platform.
class RandomStream {
   public:
    static constexpr std::string_view kGeneratorName = "mt19937_64";
    /// Bumped whenever seeding or variate construction changes.
    static constexpr int kGeneratorVersion = 1;

    RandomStream(std::uint64_t master_seed, std::string stream_id);

    /// Uniform in [0, 1).
    double draw_unit();

    /// True with probability p (one draw).
    bool bernoulli(double p) {
        return draw_unit() < p;
    }

    const std::string &id() const {
        return id_;
    }
    std::uint64_t draws() const {
        return draws_;
    }

   private:
    std::string id_;
    std::mt19937_64 engine_;
    std::uint64_t draws_ = 0;
};

/// Owns every stream of one experiment, keyed by stream id. References
/// returned by stream() stay valid for the registry's lifetime.
class StreamRegistry {
   public:
    explicit StreamRegistry(std::uint64_t master_seed) : master_seed_(master_seed) {
    }

    RandomStream &stream(const std::string &stream_id);

    std::vector<std::string> ids() const;
    std::uint64_t master_seed() const {
        return master_seed_;
    }

   private:
    std::uint64_t master_seed_;
    std::map<std::string, RandomStream, std::less<>> streams_;
};

}  // namespace qtd

#endif  // QTD_CORE_RANDOM_STREAM_H_
