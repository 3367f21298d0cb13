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

#include "qlbm/rng.hpp"

#include <algorithm>
#include <cstdint>

namespace qlbm::core {
namespace {

// splitmix64 finalizer: the standard 64-bit avalanche mix.
std::uint64_t fmix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

} // namespace

SeedKey SeedKey::with(std::uint64_t n) const {
    // Feed the child index through one splitmix64 step keyed on the parent.
    return SeedKey{fmix64(value + kGolden * (n + 1))};
}

SeedKey SeedKey::with(std::string_view label) const {
    // FNV-1a over the label, then mixed in as a numbered child.
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : label) {
        h = (h ^ c) * 1099511628211ULL;
    }
    return with(h);
}

RngStream::RngStream(SeedKey key) {
    const std::uint64_t a = key.value;
    const std::uint64_t b = fmix64(key.value + kGolden);
    std::seed_seq seq{static_cast<std::uint32_t>(a),
                      static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b),
                      static_cast<std::uint32_t>(b >> 32)};
    engine_.seed(seq);
}

std::size_t RngStream::sample_cdf(std::span<const double> cdf) {
    const double x = uniform() * cdf.back();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), x);
    const std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
    // Floating-point tails can push x past the last edge; clamp to the end.
    return std::min(idx, cdf.size() - 1);
}

} // namespace qlbm::core
