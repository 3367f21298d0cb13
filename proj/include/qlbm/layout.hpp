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

/// \file layout.hpp
/// Register geometry of simulator states.
///
/// A state is the tensor product of a distribution register (the "f
/// register", one basis label per discrete-velocity population group) and a
/// position register (one basis label per lattice cell). The basis index
/// packs the f register into the high bits:
///
///     index = (f << pos_qubits) | k
///
/// so the amplitudes of a fixed f label form one contiguous block of length
/// 2^pos_qubits, and streaming the lattice is a rotation inside a block.
///
/// Within a register, qubit 0 is the *least significant bit* of the written
/// ket label: flipping f-qubit 0 of |00>_f yields |01>_f. Ket strings like
/// |011>_f therefore read as ordinary binary numbers (here: 3).

#pragma once

#include <cstdint>

#include "qlbm/errors.hpp"

namespace qlbm::core {

/// Sizes and index helpers of an (f register ⊗ position register) state.
struct QubitLayout {
    unsigned f_qubits;
    unsigned pos_qubits;

    QubitLayout(unsigned f_qubits_, unsigned pos_qubits_)
        : f_qubits(f_qubits_), pos_qubits(pos_qubits_) {
        if (f_qubits < 1 || f_qubits > 4) {
            throw LayoutError(detail::strf(
                "f register must have 1..4 qubits; got %u", f_qubits));
        }
        if (pos_qubits < 1 || pos_qubits > 24) {
            throw LayoutError(detail::strf(
                "position register must have 1..24 qubits; got %u",
                pos_qubits));
        }
    }

    unsigned total_qubits() const { return f_qubits + pos_qubits; }

    /// Number of lattice cells, 2^pos_qubits.
    std::uint64_t cells() const { return std::uint64_t{1} << pos_qubits; }

    /// Number of f-register labels, 2^f_qubits.
    std::uint64_t f_dim() const { return std::uint64_t{1} << f_qubits; }

    /// Full statevector length, 2^(f_qubits + pos_qubits).
    std::uint64_t dim() const { return std::uint64_t{1} << total_qubits(); }

    /// Global index of the i-th f-register qubit (i = 0 is the least
    /// significant bit of the f label).
    unsigned f_qubit(unsigned i) const {
        if (i >= f_qubits) {
            throw LayoutError(
                detail::strf("f-qubit index %u out of range [0, %u)", i,
                             f_qubits));
        }
        return pos_qubits + i;
    }

    /// Global basis index of f label `f` at cell `k`.
    std::uint64_t index(std::uint64_t f, std::uint64_t k) const {
        if (f >= f_dim() || k >= cells()) {
            throw LayoutError(detail::strf(
                "basis label (f=%llu, k=%llu) outside layout (%llu x %llu)",
                static_cast<unsigned long long>(f),
                static_cast<unsigned long long>(k),
                static_cast<unsigned long long>(f_dim()),
                static_cast<unsigned long long>(cells())));
        }
        return (f << pos_qubits) | k;
    }

    /// Bitmask selecting the position bits of a basis index.
    std::uint64_t cell_mask() const { return cells() - 1; }

    bool operator==(const QubitLayout &) const = default;
};

} // namespace qlbm::core
