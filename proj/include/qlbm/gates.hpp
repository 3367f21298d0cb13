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

/// \file gates.hpp
/// Gate kernels on dense statevectors.
///
/// The hot loops run over basis-state pairs and are OpenMP-parallel; every
/// kernel has a naive serial twin in qlbm::core::ref used as a correctness
/// oracle in tests and as the baseline in the kernel benchmark. Both versions
/// are bit-exact: amplitudes are combined in the same order.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qlbm/statevector.hpp"

namespace qlbm::core {

enum class GateKind { ry, x, h };

/// One control condition: the gate acts only where `qubit` reads `value`.
/// Zero-valued (open) controls are first-class, so control cascades never
/// need X-conjugation.
struct ControlBit {
    unsigned qubit;
    bool value;
};

/// A single one-target gate with an arbitrary set of control conditions.
struct GateSpec {
    GateKind kind = GateKind::x;
    double theta = 0.0; // used by ry only
    unsigned target = 0;
    std::vector<ControlBit> controls;

    static GateSpec ry(double theta, unsigned target,
                       std::vector<ControlBit> controls = {}) {
        return {GateKind::ry, theta, target, std::move(controls)};
    }
    static GateSpec x(unsigned target, std::vector<ControlBit> controls = {}) {
        return {GateKind::x, 0.0, target, std::move(controls)};
    }
    static GateSpec h(unsigned target, std::vector<ControlBit> controls = {}) {
        return {GateKind::h, 0.0, target, std::move(controls)};
    }
};

enum class ShiftDirection { positive, negative };

/// Applies `gate` to `state`: the 2x2 unitary acts on the target qubit in
/// the subspace where every control condition holds.
void apply_gate(StateVector &state, const GateSpec &gate);

/// Cyclic shift of the position register restricted to the f labels matching
/// `controls` (which must all sit on f-register qubits). positive maps cell k
/// to k+1 mod cells; negative is the inverse.
void apply_cyclic_shift(StateVector &state, ShiftDirection direction,
                        std::span<const ControlBit> controls = {});

/// Multiplexed RY: rotates the f-register target qubit with a per-cell angle
/// theta_by_cell[k], under the given control conditions. This is how
/// collision blocks consume a space-dependent advection velocity.
void apply_position_keyed_ry(StateVector &state, unsigned target,
                             std::span<const ControlBit> controls,
                             std::span<const double> theta_by_cell);

/// Exchanges the amplitude blocks of two f labels. This is the permutation
/// realized by the relabeling X-cascades of the collision blocks, applied at
/// simulator level in one pass.
void swap_f_labels(StateVector &state, std::uint64_t label_a,
                   std::uint64_t label_b);

namespace ref {

/// Serial reference implementations: full-index traversal, no OpenMP, no
/// pair tricks. Slow on purpose; used to validate the optimized kernels.
void apply_gate(StateVector &state, const GateSpec &gate);
void apply_cyclic_shift(StateVector &state, ShiftDirection direction,
                        std::span<const ControlBit> controls = {});
void apply_position_keyed_ry(StateVector &state, unsigned target,
                             std::span<const ControlBit> controls,
                             std::span<const double> theta_by_cell);
void swap_f_labels(StateVector &state, std::uint64_t label_a,
                   std::uint64_t label_b);

} // namespace ref
} // namespace qlbm::core
