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

#include "qlbm/gates.hpp"

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "qlbm/gates_detail.hpp"

namespace qlbm::core {

using detail::kParallelCutoff;
using detail::Mat2;
using detail::PackedControls;

namespace detail {

#if defined(__GNUC__)
__attribute__((noinline))
#endif
HalfAngle half_angle(double theta) {
    return {std::cos(theta / 2.0), std::sin(theta / 2.0)};
}

Mat2 gate_matrix(const GateSpec &gate) {
    switch (gate.kind) {
        case GateKind::ry: {
            const auto [c, s] = half_angle(gate.theta);
            return {c, -s, s, c};
        }
        case GateKind::x:
            return {0.0, 1.0, 1.0, 0.0};
        case GateKind::h: {
            const double r = 1.0 / std::sqrt(2.0);
            return {r, r, r, -r};
        }
    }
    throw LayoutError("unknown gate kind");
}

PackedControls pack_controls(std::span<const ControlBit> controls,
                             const QubitLayout &layout, unsigned target) {
    PackedControls packed;
    for (const ControlBit &cb : controls) {
        if (cb.qubit >= layout.total_qubits()) {
            throw LayoutError(qlbm::detail::strf(
                "control qubit %u outside the %u-qubit layout", cb.qubit,
                layout.total_qubits()));
        }
        if (cb.qubit == target) {
            throw LayoutError(qlbm::detail::strf(
                "qubit %u used as both control and target", cb.qubit));
        }
        const std::uint64_t bit = std::uint64_t{1} << cb.qubit;
        if (packed.mask & bit) {
            throw LayoutError(
                qlbm::detail::strf("duplicate control on qubit %u", cb.qubit));
        }
        packed.mask |= bit;
        if (cb.value) {
            packed.value |= bit;
        }
    }
    return packed;
}

void check_target(const QubitLayout &layout, unsigned target) {
    if (target >= layout.total_qubits()) {
        throw LayoutError(qlbm::detail::strf(
            "target qubit %u outside the %u-qubit layout", target,
            layout.total_qubits()));
    }
}

void check_shift_controls(const QubitLayout &layout,
                          std::span<const ControlBit> controls) {
    for (const ControlBit &cb : controls) {
        if (cb.qubit < layout.pos_qubits ||
            cb.qubit >= layout.total_qubits()) {
            throw LayoutError(qlbm::detail::strf(
                "cyclic shift controls must sit on the f register; qubit %u "
                "does not",
                cb.qubit));
        }
    }
}

void check_f_label(const QubitLayout &layout, std::uint64_t label,
                   const char *which) {
    if (label >= layout.f_dim()) {
        throw LayoutError(qlbm::detail::strf(
            "%s f label %llu outside register of %llu labels", which,
            static_cast<unsigned long long>(label),
            static_cast<unsigned long long>(layout.f_dim())));
    }
}

} // namespace detail

namespace {

// Core pair loop shared by apply_gate and the multiplexed RY: basis states
// are visited as (i0, i1 = i0 | target_bit) pairs; p enumerates the pair
// index with the target bit squeezed out.
void apply_mat2(StateVector &state, unsigned target,
                const PackedControls &packed, const Mat2 &m) {
    Amplitude *amps = state.data();
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const std::uint64_t low = tbit - 1;
    const std::int64_t pairs = static_cast<std::int64_t>(state.dim() >> 1);

#pragma omp parallel for schedule(static) if (pairs >= kParallelCutoff)
    for (std::int64_t p = 0; p < pairs; ++p) {
        const std::uint64_t up = static_cast<std::uint64_t>(p);
        const std::uint64_t i0 = ((up & ~low) << 1) | (up & low);
        if ((i0 & packed.mask) != packed.value) {
            continue;
        }
        const std::uint64_t i1 = i0 | tbit;
        const Amplitude a0 = amps[i0];
        const Amplitude a1 = amps[i1];
        amps[i0] = m.m00 * a0 + m.m01 * a1;
        amps[i1] = m.m10 * a0 + m.m11 * a1;
    }
}

} // namespace

void apply_gate(StateVector &state, const GateSpec &gate) {
    const QubitLayout &layout = state.layout();
    detail::check_target(layout, gate.target);
    const PackedControls packed =
        detail::pack_controls(gate.controls, layout, gate.target);
    apply_mat2(state, gate.target, packed, detail::gate_matrix(gate));
}

void apply_position_keyed_ry(StateVector &state, unsigned target,
                             std::span<const ControlBit> controls,
                             std::span<const double> theta_by_cell) {
    const QubitLayout &layout = state.layout();
    detail::check_target(layout, target);
    if (target < layout.pos_qubits) {
        throw LayoutError(qlbm::detail::strf(
            "multiplexed rotation must target an f-register qubit; %u is a "
            "position qubit",
            target));
    }
    if (theta_by_cell.size() != layout.cells()) {
        throw LayoutError(qlbm::detail::strf(
            "multiplexed rotation needs one angle per cell: got %zu for %llu "
            "cells",
            theta_by_cell.size(),
            static_cast<unsigned long long>(layout.cells())));
    }
    const PackedControls packed =
        detail::pack_controls(controls, layout, target);

    const std::uint64_t cells = layout.cells();
    std::vector<double> cos_half(cells), sin_half(cells);
    for (std::uint64_t k = 0; k < cells; ++k) {
        const detail::HalfAngle half = detail::half_angle(theta_by_cell[k]);
        cos_half[k] = half.c;
        sin_half[k] = half.s;
    }

    Amplitude *amps = state.data();
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const std::uint64_t low = tbit - 1;
    const std::uint64_t cell_mask = layout.cell_mask();
    const std::int64_t pairs = static_cast<std::int64_t>(state.dim() >> 1);

#pragma omp parallel for schedule(static) if (pairs >= kParallelCutoff)
    for (std::int64_t p = 0; p < pairs; ++p) {
        const std::uint64_t up = static_cast<std::uint64_t>(p);
        const std::uint64_t i0 = ((up & ~low) << 1) | (up & low);
        if ((i0 & packed.mask) != packed.value) {
            continue;
        }
        // The target is an f qubit, so both pair members share the cell k.
        const std::uint64_t k = i0 & cell_mask;
        const double c = cos_half[k];
        const double s = sin_half[k];
        const std::uint64_t i1 = i0 | tbit;
        const Amplitude a0 = amps[i0];
        const Amplitude a1 = amps[i1];
        amps[i0] = c * a0 - s * a1;
        amps[i1] = s * a0 + c * a1;
    }
}

void apply_cyclic_shift(StateVector &state, ShiftDirection direction,
                        std::span<const ControlBit> controls) {
    const QubitLayout &layout = state.layout();
    detail::check_shift_controls(layout, controls);
    const PackedControls packed = detail::pack_controls(
        controls, layout, /*target=*/layout.total_qubits());

    const std::uint64_t cells = layout.cells();
    const std::uint64_t cell_mask = layout.cell_mask();
    const std::uint64_t step =
        direction == ShiftDirection::positive ? 1 : cells - 1;
    const std::int64_t dim = static_cast<std::int64_t>(state.dim());

    // Permute into a scratch buffer, then publish it by swapping. The buffer
    // is thread_local and grow-only, so tight per-shot loops do not allocate.
    static thread_local std::vector<Amplitude> scratch;
    scratch.resize(static_cast<std::size_t>(dim));
    const Amplitude *src = state.data();
    Amplitude *dst = scratch.data();

#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
    for (std::int64_t i = 0; i < dim; ++i) {
        const std::uint64_t ui = static_cast<std::uint64_t>(i);
        const std::uint64_t block = ui & ~cell_mask;
        std::uint64_t j = ui;
        if ((block & packed.mask) == packed.value) {
            j = block | ((ui + step) & cell_mask);
        }
        dst[j] = src[i];
    }
    state.swap_buffer(scratch);
}

void swap_f_labels(StateVector &state, std::uint64_t label_a,
                   std::uint64_t label_b) {
    const QubitLayout &layout = state.layout();
    detail::check_f_label(layout, label_a, "first");
    detail::check_f_label(layout, label_b, "second");
    if (label_a == label_b) {
        throw LayoutError("swap_f_labels requires two distinct labels");
    }
    Amplitude *a = state.data() + (label_a << layout.pos_qubits);
    Amplitude *b = state.data() + (label_b << layout.pos_qubits);
    const std::int64_t cells = static_cast<std::int64_t>(layout.cells());

#pragma omp parallel for schedule(static) if (cells >= kParallelCutoff)
    for (std::int64_t k = 0; k < cells; ++k) {
        std::swap(a[k], b[k]);
    }
}

} // namespace qlbm::core
