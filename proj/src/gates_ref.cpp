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

// Serial reference kernels. These traverse every basis index and transcribe
// the gate definitions as literally as possible; the optimized kernels in
// gates.cpp must agree with them bit for bit.

#include <cmath>
#include <cstdint>
#include <vector>

#include "qlbm/gates.hpp"
#include "qlbm/gates_detail.hpp"

namespace qlbm::core::ref {

using detail::Mat2;
using detail::PackedControls;

void apply_gate(StateVector &state, const GateSpec &gate) {
    const QubitLayout &layout = state.layout();
    detail::check_target(layout, gate.target);
    const PackedControls packed =
        detail::pack_controls(gate.controls, layout, gate.target);
    const Mat2 m = detail::gate_matrix(gate);

    const std::uint64_t tbit = std::uint64_t{1} << gate.target;
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        // Visit each pair once, from its lower member.
        if ((i & tbit) != 0 || (i & packed.mask) != packed.value) {
            continue;
        }
        const Amplitude a0 = state[i];
        const Amplitude a1 = state[i | tbit];
        state[i] = m.m00 * a0 + m.m01 * a1;
        state[i | tbit] = m.m10 * a0 + m.m11 * a1;
    }
}

void apply_position_keyed_ry(StateVector &state, unsigned target,
                             std::span<const ControlBit> controls,
                             std::span<const double> theta_by_cell) {
    const QubitLayout &layout = state.layout();
    detail::check_target(layout, target);
    if (target < layout.pos_qubits) {
        throw LayoutError("multiplexed rotation must target an f-register "
                          "qubit");
    }
    if (theta_by_cell.size() != layout.cells()) {
        throw LayoutError("multiplexed rotation needs one angle per cell");
    }
    const PackedControls packed =
        detail::pack_controls(controls, layout, target);

    const std::uint64_t tbit = std::uint64_t{1} << target;
    const std::uint64_t cell_mask = layout.cell_mask();
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if ((i & tbit) != 0 || (i & packed.mask) != packed.value) {
            continue;
        }
        const auto [c, s] = detail::half_angle(theta_by_cell[i & cell_mask]);
        const Amplitude a0 = state[i];
        const Amplitude a1 = state[i | tbit];
        state[i] = c * a0 - s * a1;
        state[i | tbit] = s * a0 + c * a1;
    }
}

void apply_cyclic_shift(StateVector &state, ShiftDirection direction,
                        std::span<const ControlBit> controls) {
    const QubitLayout &layout = state.layout();
    detail::check_shift_controls(layout, controls);
    const PackedControls packed = detail::pack_controls(
        controls, layout, /*target=*/layout.total_qubits());

    const std::uint64_t cells = layout.cells();
    std::vector<Amplitude> block(cells);
    for (std::uint64_t f = 0; f < layout.f_dim(); ++f) {
        const std::uint64_t base = f << layout.pos_qubits;
        if ((base & packed.mask) != packed.value) {
            continue;
        }
        for (std::uint64_t k = 0; k < cells; ++k) {
            const std::uint64_t k_to = direction == ShiftDirection::positive
                                           ? (k + 1) & layout.cell_mask()
                                           : (k + cells - 1) &
                                                 layout.cell_mask();
            block[k_to] = state[base | k];
        }
        for (std::uint64_t k = 0; k < cells; ++k) {
            state[base | k] = block[k];
        }
    }
}

void swap_f_labels(StateVector &state, std::uint64_t label_a,
                   std::uint64_t label_b) {
    const QubitLayout &layout = state.layout();
    detail::check_f_label(layout, label_a, "first");
    detail::check_f_label(layout, label_b, "second");
    if (label_a == label_b) {
        throw LayoutError("swap_f_labels requires two distinct labels");
    }
    for (std::uint64_t k = 0; k < layout.cells(); ++k) {
        const std::uint64_t ia = (label_a << layout.pos_qubits) | k;
        const std::uint64_t ib = (label_b << layout.pos_qubits) | k;
        const Amplitude tmp = state[ia];
        state[ia] = state[ib];
        state[ib] = tmp;
    }
}

} // namespace qlbm::core::ref
