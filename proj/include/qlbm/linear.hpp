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

/// \file linear.hpp
/// Multi-timestep quantum solver for the linear-equilibrium D1Q3 model.
///
/// The state uses a 2-qubit f register. Each timestep applies the collision
/// block (which writes sqrt-equilibrium weights onto the f register), the
/// conditioned streaming shifts, and then measures and resets the f register.
/// Because every collision branch carries the *same* position distribution
/// evolution regardless of the measured label, the exact backend can merge
/// the measurement branches into the single state sqrt(position marginal)
/// instead of tracking each outcome; the shot backend simulates genuine
/// per-shot trajectories with mid-circuit measurements.

#pragma once

#include <cstdint>
#include <vector>

#include "qlbm/encoding.hpp"
#include "qlbm/gates.hpp"
#include "qlbm/lattice.hpp"
#include "qlbm/measure.hpp"

namespace qlbm::linear {

/// RY arguments of the collision block. theta0 is fixed by the velocity set;
/// theta1 depends on the advection velocity (one entry when uniform,
/// otherwise one per cell).
struct CollisionAngles {
    double theta0;
    std::vector<double> theta1;
    bool uniform;
};

/// 2*arccos(sqrt(w0)): splits rest population from the movers.
double theta0();

/// 2*arccos(sqrt((1 + u/cs^2)/2)): splits the movers. Throws
/// AdmissibilityError when |u| > cs^2 = 1/3 (arccos argument leaves [0, 1]).
double theta1(double u);

/// Angles for a uniform or per-cell velocity on `cells` lattice cells.
CollisionAngles collision_angles(const lattice::VelocityField &u,
                                 std::size_t cells);

/// Applies the collision block. Requires a 2-qubit f register holding |00>
/// (mass outside the f=0 block above 1e-9 is a StateError: the block's
/// angle algebra assumes a reset register).
void apply_collision(core::StateVector &state, const CollisionAngles &angles);

/// Applies the two conditioned cyclic shifts: the +1 mover block streams one
/// cell up, the -1 mover block one cell down, rest stays.
void apply_streaming(core::StateVector &state);

enum class Backend { exact, shots };

struct RunConfig {
    unsigned pos_qubits = 5;
    unsigned steps = 20;
    lattice::VelocityField u = lattice::VelocityField::uniform(0.3);
    Backend backend = Backend::exact;
    std::uint64_t shots = 900000; // per recorded step, shot backend only
    core::SeedKey seed{};
    /// Steps at which to record the density (values in [0, steps]). Empty
    /// records the final step only. The shot backend runs an independent
    /// trajectory batch per recorded step, so long lists are expensive.
    std::vector<unsigned> record_steps;
};

/// Density recorded after `step` timesteps. std_error is per-cell binomial
/// error (shot backend only).
struct Snapshot {
    unsigned step;
    lattice::DensityField density;
    std::vector<double> std_error;
};

struct RunResult {
    std::vector<Snapshot> trajectory; // ascending by step
    double norm_sq = 0.0;             // encoding normalization C^2
};

/// Runs the full pipeline: encode `initial`, then `steps` rounds of
/// collide / stream / measure-and-reset, decoding at the recorded steps.
RunResult run(const RunConfig &config, const lattice::DensityField &initial);

} // namespace qlbm::linear
