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

/// \file gates_detail.hpp
/// Internals shared by the optimized and reference gate kernels. Not part of
/// the public API.

#pragma once

#include <cstdint>
#include <span>

#include "qlbm/gates.hpp"
#include "qlbm/layout.hpp"

namespace qlbm::core::detail {

/// Real 2x2 gate matrix (all gates used here are real).
struct Mat2 {
    double m00, m01, m10, m11;
};

/// Control conditions packed into (mask, expected-bits) form so a basis
/// index satisfies them iff (index & mask) == value.
struct PackedControls {
    std::uint64_t mask = 0;
    std::uint64_t value = 0;
};

/// States smaller than this run the kernels serially; the OpenMP fork is not
/// worth it and tight per-shot loops stay allocation- and barrier-free.
inline constexpr std::int64_t kParallelCutoff = std::int64_t{1} << 12;

Mat2 gate_matrix(const GateSpec &gate);

/// cos and sin of theta/2.
struct HalfAngle {
    double c;
    double s;
};

/// Computed through one non-inlined function so every kernel (parallel,
/// reference, uniform, multiplexed) sees identical rounding: libm's cos/sin
/// and the compiler-fused sincos may disagree in the last ulp, which would
/// break the kernels' bit-exact-agreement guarantee if each call site chose
/// independently.
HalfAngle half_angle(double theta);

/// Validates and packs controls. `target` only guards the control-equals-
/// target error; pass layout.total_qubits() when there is no target.
PackedControls pack_controls(std::span<const ControlBit> controls,
                             const QubitLayout &layout, unsigned target);

void check_target(const QubitLayout &layout, unsigned target);
void check_shift_controls(const QubitLayout &layout,
                          std::span<const ControlBit> controls);
void check_f_label(const QubitLayout &layout, std::uint64_t label,
                   const char *which);

} // namespace qlbm::core::detail
