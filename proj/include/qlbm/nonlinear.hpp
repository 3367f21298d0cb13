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

/// \file nonlinear.hpp
/// Hybrid single-step quantum solver for the nonlinear-equilibrium D1Q3
/// model.
///
/// The quadratic equilibrium cannot ride through a measurement-reset the way
/// the linear one does, so each timestep runs one quantum circuit (encode,
/// collide on a 3-qubit f register, stream), reads out the full register
/// distribution, classically reconstructs the populations, and re-encodes
/// the new density for the next step.
///
/// The collision block factors the quadratic equilibrium into square
/// completions: mover populations appear split across two f labels, one
/// carrying the squared term scaled by 1/4 (labels 100/110, with the H stage
/// providing the extra sqrt(1/2) splits) and one carrying a constant w/4
/// remnant (labels 010/011). The readout ledger reassembles
///   f0 = C^2 p(000),  f1 = C^2 (4 p(100) + p(010)),
///   f2 = C^2 (4 p(110) + p(011))
/// and discards labels 001, 101, 111.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qlbm/encoding.hpp"
#include "qlbm/gates.hpp"
#include "qlbm/lattice.hpp"
#include "qlbm/measure.hpp"

namespace qlbm::nonlinear {

/// f-register labels used by the readout ledger (read as binary numbers).
namespace flabel {
inline constexpr std::uint64_t rest = 0b000;        // carries f0
inline constexpr std::uint64_t plus_const = 0b010;  // w1/4 remnant of f1
inline constexpr std::uint64_t plus_sq = 0b100;     // squared term of f1 (x4)
inline constexpr std::uint64_t minus_const = 0b011; // w2/4 remnant of f2
inline constexpr std::uint64_t minus_sq = 0b110;    // squared term of f2 (x4)
} // namespace flabel

/// RY/H arguments of the collision block. theta0 and theta2 are constants of
/// the velocity set; theta1, theta3, theta4 depend on u (one entry when
/// uniform, otherwise one per cell).
struct CollisionAngles {
    double theta0;
    double theta2;
    std::vector<double> theta1;
    std::vector<double> theta3;
    std::vector<double> theta4;
    bool uniform;
};

/// 2*arccos(sqrt(w0)), identical to the linear block's first angle.
double theta0();

/// 2*arcsin(sqrt(3/2) u). Throws AdmissibilityError when |sqrt(3/2) u| > 1.
double theta1(double u);

/// 2*arccos(sqrt(1/4)) = 2*pi/3: fixed split between the squared and
/// constant parts of a mover population.
double theta2();

/// 2*arccos(u + 1/2). Throws AdmissibilityError when u + 1/2 leaves [-1, 1].
double theta3(double u);

/// 2*arccos(u - 1/2). Throws AdmissibilityError when u - 1/2 leaves [-1, 1].
double theta4(double u);

/// Angles for a uniform or per-cell velocity on `cells` lattice cells. The
/// admissible window is the intersection of the arc bounds: u in [-1/2, 1/2].
CollisionAngles collision_angles(const lattice::VelocityField &u,
                                 std::size_t cells);

/// Applies the eight-stage collision block. Requires a 3-qubit f register
/// holding |000> (mass outside the f=0 block above 1e-9 is a StateError).
void apply_collision(core::StateVector &state, const CollisionAngles &angles);

/// Streams the mover labels: 100 and 010 shift one cell up, 110 and 011 one
/// cell down; all other labels stay.
void apply_streaming(core::StateVector &state);

/// Population fields reconstructed by the readout ledger.
struct Distributions {
    lattice::DensityField f0;
    lattice::DensityField f1;
    lattice::DensityField f2;
};

/// Applies the readout ledger to a full-register probability table (length
/// 8 * cells, indexed like basis states) with encoding normalization
/// norm_sq.
Distributions readout_distributions(std::span<const double> basis_probs,
                                    double norm_sq, std::size_t cells);

/// How the per-step readout obtains the register distribution: exact
/// |amplitude|^2 tables, or a finite-shot histogram.
enum class Readout { deterministic, sampled };

struct RunConfig {
    unsigned pos_qubits = 5;
    unsigned steps = 20;
    Readout readout = Readout::deterministic;
    std::uint64_t shots = 900000; // per step, sampled readout only
    core::SeedKey seed{};
    /// Recompute u from the momentum moment after each step. Off by default:
    /// the density is then a passive scalar advected by the fixed input
    /// velocity (the regime of the Gaussian-hill validation).
    bool update_velocity = false;
};

/// Density (and the velocity in effect) after each step; index 0 is the
/// initial condition.
struct StepRecord {
    lattice::DensityField rho;
    lattice::VelocityField u;
};

struct RunResult {
    std::vector<StepRecord> trajectory; // length steps + 1
};

/// Runs `steps` hybrid iterations from (rho0, u0). With update_velocity, a
/// zero reconstructed density in any cell raises DegeneracyError, and a
/// velocity pushed outside [-1/2, 1/2] raises AdmissibilityError; both
/// identify the offending step.
RunResult run(const RunConfig &config, const lattice::DensityField &rho0,
              const lattice::VelocityField &u0);

} // namespace qlbm::nonlinear
