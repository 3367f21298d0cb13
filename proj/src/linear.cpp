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

#include "qlbm/linear.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qlbm::linear {
namespace {

using core::ControlBit;
using core::GateSpec;
using core::QubitLayout;
using core::ShiftDirection;
using core::StateVector;
using lattice::VelocitySetD1Q3;

/// Probability tolerated outside the f=0 block by the collision block.
constexpr double kResetTolerance = 1e-9;

void check_f_register_reset(const StateVector &state) {
    const QubitLayout &layout = state.layout();
    double leaked = 0.0;
    for (std::uint64_t i = layout.cells(); i < state.dim(); ++i) {
        leaked += std::norm(state[i]);
    }
    if (leaked > kResetTolerance) {
        throw StateError(qlbm::detail::strf(
            "collision block requires a reset f register; %.3e probability "
            "sits outside the f=0 block",
            leaked));
    }
}

/// Replaces the state by sqrt(position marginal) on the f=0 block. After a
/// measure-and-reset every branch carries the same position distribution
/// forward, so the mixture over branches is equivalent to this single state.
void merge_measured_branches(StateVector &state) {
    const std::vector<double> probs = core::position_probabilities(state);
    const std::uint64_t cells = state.layout().cells();
    for (std::uint64_t k = 0; k < cells; ++k) {
        state[k] = core::Amplitude{std::sqrt(probs[k]), 0.0};
    }
    for (std::uint64_t i = cells; i < state.dim(); ++i) {
        state[i] = core::Amplitude{0.0, 0.0};
    }
}

/// Recorded steps in ascending order; empty input means "final step only".
std::vector<unsigned> resolve_record_steps(const RunConfig &config) {
    std::vector<unsigned> steps = config.record_steps;
    if (steps.empty()) {
        steps.push_back(config.steps);
    }
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    if (steps.back() > config.steps) {
        throw DomainError(qlbm::detail::strf(
            "cannot record step %u of a %u-step run", steps.back(),
            config.steps));
    }
    return steps;
}

void advance_one_step(StateVector &state, const CollisionAngles &angles) {
    apply_collision(state, angles);
    apply_streaming(state);
}

/// One full shot: evolve a private copy of the encoded state with genuine
/// mid-circuit measurements, then sample the position register once.
std::uint64_t run_single_shot(StateVector &state, unsigned steps,
                              const CollisionAngles &angles,
                              core::RngStream &rng) {
    for (unsigned t = 0; t < steps; ++t) {
        advance_one_step(state, angles);
        core::measure_f_and_reset(state, rng);
    }
    // After the reset only the f=0 block is occupied; draw a cell from it.
    const std::uint64_t cells = state.layout().cells();
    const double r = rng.uniform();
    double acc = 0.0;
    std::uint64_t pick = 0;
    bool any = false;
    for (std::uint64_t k = 0; k < cells; ++k) {
        const double p = std::norm(state[k]);
        if (p > 0.0) {
            pick = k;
            any = true;
        }
        acc += p;
        if (r < acc) {
            return k;
        }
    }
    if (!any) {
        throw DegeneracyError("shot ended on a zero-mass position register");
    }
    return pick; // floating-point tail: return the last occupied cell
}

core::ShotHistogram run_shot_batch(const StateVector &initial, unsigned steps,
                                   const CollisionAngles &angles,
                                   std::uint64_t shots, core::SeedKey key) {
    if (shots == 0) {
        throw DomainError("shot backend requires at least one shot");
    }
    const std::uint64_t cells = initial.layout().cells();
    std::vector<std::uint64_t> counts(cells, 0);
    const std::int64_t n = static_cast<std::int64_t>(shots);

#pragma omp parallel
    {
        std::vector<std::uint64_t> local(cells, 0);
        StateVector state = initial; // per-thread buffer, reused every shot
#pragma omp for schedule(static)
        for (std::int64_t shot = 0; shot < n; ++shot) {
            core::RngStream rng(key.with(static_cast<std::uint64_t>(shot)));
            state = initial;
            ++local[run_single_shot(state, steps, angles, rng)];
        }
#pragma omp critical
        {
            for (std::uint64_t k = 0; k < cells; ++k) {
                counts[k] += local[k];
            }
        }
    }
    return {std::move(counts), shots, 1.0};
}

} // namespace

double theta0() {
    return 2.0 * std::acos(std::sqrt(VelocitySetD1Q3::w0));
}

double theta1(double u) {
    const double arg = 0.5 * (1.0 + u / VelocitySetD1Q3::cs_sq);
    if (arg < 0.0 || arg > 1.0) {
        throw AdmissibilityError(qlbm::detail::strf(
            "theta1 requires |u| <= cs^2 = 1/3 (arccos argument (1 + "
            "u/cs^2)/2 = %.17g left [0, 1]); got u = %.17g",
            arg, u));
    }
    return 2.0 * std::acos(std::sqrt(arg));
}

CollisionAngles collision_angles(const lattice::VelocityField &u,
                                 std::size_t cells) {
    CollisionAngles angles{theta0(), {}, u.is_uniform()};
    if (u.is_uniform()) {
        angles.theta1.push_back(theta1(u.at(0)));
    } else {
        if (u.size() != cells) {
            throw LayoutError(qlbm::detail::strf(
                "velocity field of %zu cells does not match %zu lattice "
                "cells",
                u.size(), cells));
        }
        angles.theta1.reserve(cells);
        for (std::size_t k = 0; k < cells; ++k) {
            angles.theta1.push_back(theta1(u.at(k)));
        }
    }
    return angles;
}

void apply_collision(core::StateVector &state, const CollisionAngles &angles) {
    const QubitLayout &layout = state.layout();
    if (layout.f_qubits != 2) {
        throw LayoutError(qlbm::detail::strf(
            "linear collision needs a 2-qubit f register; state has %u",
            layout.f_qubits));
    }
    check_f_register_reset(state);

    const unsigned fq0 = layout.f_qubit(0);
    const unsigned fq1 = layout.f_qubit(1);

    // Split rest weight from the movers: |00> -> cos(t0/2)|00> +
    // sin(t0/2)|01>.
    core::apply_gate(state, GateSpec::ry(angles.theta0, fq0));
    // Split the movers on the second f qubit, only where the first reads 1.
    if (angles.uniform) {
        core::apply_gate(state, GateSpec::ry(angles.theta1[0], fq1,
                                             {{fq0, true}}));
    } else {
        const ControlBit controls[] = {{fq0, true}};
        core::apply_position_keyed_ry(state, fq1, controls, angles.theta1);
    }
    // Relabel |11> -> |10> so the mover labels are 01 (up) and 10 (down).
    core::apply_gate(state, GateSpec::x(fq0, {{fq1, true}}));
}

void apply_streaming(core::StateVector &state) {
    const QubitLayout &layout = state.layout();
    if (layout.f_qubits != 2) {
        throw LayoutError(qlbm::detail::strf(
            "linear streaming needs a 2-qubit f register; state has %u",
            layout.f_qubits));
    }
    const unsigned fq0 = layout.f_qubit(0);
    const unsigned fq1 = layout.f_qubit(1);

    const ControlBit up[] = {{fq0, true}, {fq1, false}};   // f label 01
    core::apply_cyclic_shift(state, ShiftDirection::positive, up);
    const ControlBit down[] = {{fq0, false}, {fq1, true}}; // f label 10
    core::apply_cyclic_shift(state, ShiftDirection::negative, down);
}

RunResult run(const RunConfig &config, const lattice::DensityField &initial) {
    const QubitLayout layout(2, config.pos_qubits);
    const CollisionAngles angles =
        collision_angles(config.u, layout.cells());
    const std::vector<unsigned> record = resolve_record_steps(config);

    const encoding::EncodedState encoded =
        encoding::encode_sqrt_density(initial, layout);

    RunResult result;
    result.norm_sq = encoded.norm_sq;
    result.trajectory.reserve(record.size());

    if (config.backend == Backend::exact) {
        StateVector state = encoded.state;
        std::size_t next = 0;
        for (unsigned t = 0; t <= config.steps && next < record.size(); ++t) {
            if (t > 0) {
                advance_one_step(state, angles);
                merge_measured_branches(state);
            }
            if (record[next] == t) {
                result.trajectory.push_back(
                    {t,
                     encoding::decode_density(
                         core::position_probabilities(state),
                         encoded.norm_sq),
                     {}});
                ++next;
            }
        }
    } else {
        // Mid-circuit measurements destroy the state, so each recorded step
        // gets its own batch of full trajectories.
        for (unsigned step : record) {
            const core::ShotHistogram hist = run_shot_batch(
                encoded.state, step, angles, config.shots,
                config.seed.with("record").with(step));
            encoding::DecodedDensity decoded =
                encoding::decode_density(hist, encoded.norm_sq);
            result.trajectory.push_back({step, std::move(decoded.density),
                                         std::move(decoded.std_error)});
        }
    }
    return result;
}

} // namespace qlbm::linear
