// Copyright 2026 The qlbm-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file rng.hpp
/// Deterministic, splittable randomness.
///
/// All randomness in a run flows from one root SeedKey. Substreams are
/// derived by chaining labels and indices (`key.with("shots").with(i)`), so
/// parallel workers can own independent streams without coordination and a
/// run is reproducible bit-for-bit regardless of worker count.
///
/// Draws are built from raw 64-bit engine words instead of the std::
/// distribution adaptors, whose output is implementation-defined and would
/// make artifacts differ across standard libraries.

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace qlbm::core {

/// Value-type key identifying one random substream.
struct SeedKey {
    std::uint64_t value = 0;

    /// Key of the numbered child substream.
    SeedKey with(std::uint64_t n) const;

    /// Key of the named child substream.
    SeedKey with(std::string_view label) const;

    bool operator==(const SeedKey &) const = default;
};

/// One random stream: a mt19937_64 engine seeded from a SeedKey.
class RngStream {
  public:
    explicit RngStream(SeedKey key);

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Samples an index from a categorical distribution given its inclusive
    /// cumulative sums (cdf.back() is the total mass, usually 1).
    std::size_t sample_cdf(std::span<const double> cdf);

  private:
    std::mt19937_64 engine_;
};

} // namespace qlbm::core
