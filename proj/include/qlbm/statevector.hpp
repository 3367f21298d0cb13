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

/// \file statevector.hpp
/// Dense double-precision statevector over the layout of layout.hpp.

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qlbm/layout.hpp"

namespace qlbm::core {

using Amplitude = std::complex<double>;

/// Dense statevector. Freshly constructed states are |0...0> (all mass on f
/// label 0, cell 0); use zeros() for an all-zero buffer to fill manually.
class StateVector {
  public:
    explicit StateVector(QubitLayout layout)
        : layout_(layout), amps_(layout.dim()) {
        amps_[0] = Amplitude{1.0, 0.0};
    }

    /// A state with every amplitude zero (not normalized; for manual loads).
    static StateVector zeros(QubitLayout layout) {
        StateVector s(layout);
        s.amps_[0] = Amplitude{0.0, 0.0};
        return s;
    }

    const QubitLayout &layout() const { return layout_; }
    std::uint64_t dim() const { return amps_.size(); }

    Amplitude &operator[](std::uint64_t i) { return amps_[i]; }
    const Amplitude &operator[](std::uint64_t i) const { return amps_[i]; }

    /// Amplitude of f label `f` at cell `k` (bounds-checked via the layout).
    Amplitude &at(std::uint64_t f, std::uint64_t k) {
        return amps_[layout_.index(f, k)];
    }
    const Amplitude &at(std::uint64_t f, std::uint64_t k) const {
        return amps_[layout_.index(f, k)];
    }

    Amplitude *data() { return amps_.data(); }
    const Amplitude *data() const { return amps_.data(); }

    std::span<Amplitude> amplitudes() { return amps_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }

    /// Squared two-norm, summed serially so the result is deterministic.
    double norm_sq() const {
        double total = 0.0;
        for (const Amplitude &a : amps_) {
            total += std::norm(a);
        }
        return total;
    }

    /// Swaps the amplitude buffer with `other` (used by permutation kernels
    /// to publish a scratch buffer without copying). `other` must have the
    /// same length.
    void swap_buffer(std::vector<Amplitude> &other) {
        if (other.size() != amps_.size()) {
            throw LayoutError("buffer swap requires matching lengths");
        }
        amps_.swap(other);
    }

  private:
    QubitLayout layout_;
    std::vector<Amplitude> amps_;
};

} // namespace qlbm::core
