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

#include "qlbm/nonlinear.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace qlbm::nonlinear {
namespace {

using core::ControlBit;
using core::GateSpec;
using core::QubitLayout;
using core::ShiftDirection;
using core::StateVector;
using lattice::VelocitySetD1Q3;

constexpr double kResetTolerance = 1e-9;

void check_f_register_reset(const StateVector &state) {
    double leaked = 0.0;
    for (std::uint64_t i = state.layout().cells(); i < state.dim(); ++i) {
        leaked += std::norm(state[i]);
    }
    if (leaked > kResetTolerance) {
        throw StateError(qlbm::detail::strf(
            "collision block requires a reset f register; %.3e probability "
            "sits outside the f=0 block",
            leaked));
    }
}

void check_three_f_qubits(const QubitLayout &layout, const char *what) {
    if (layout.f_qubits != 3) {
        throw LayoutError(qlbm::detail::strf(
            "nonlinear %s needs a 3-qubit f register; state has %u", what,
            layout.f_qubits));
    }
}

/// Applies an RY stage that is either one fixed angle or one angle per cell.
void apply_ry_stage(StateVector &state, unsigned target,
                    std::span<const ControlBit> controls,
                    const std::vector<double> &theta, bool uniform) {
    if (uniform) {
        core::apply_gate(state,
                         GateSpec::ry(theta[0], target,
                                      {controls.begin(), controls.end()}));
    } else {
        core::apply_position_keyed_ry(state, target, controls, theta);
    }
}

} // namespace

double theta0() {
    return 2.0 * std::acos(std::sqrt(VelocitySetD1Q3::w0));
}

double theta1(double u) {
    const double arg = std::sqrt(1.5) * u;
    if (arg < -1.0 || arg > 1.0) {
        throw AdmissibilityError(qlbm::detail::strf(
            "theta1 requires |u| <= sqrt(2/3) (arcsin argument sqrt(3/2)*u "
            "= %.17g left [-1, 1]); got u = %.17g",
            arg, u));
    }
    return 2.0 * std::asin(arg);
}

double theta2() { return 2.0 * std::acos(std::sqrt(0.25)); }

double theta3(double u) {
    const double arg = u + 0.5;
    if (arg < -1.0 || arg > 1.0) {
        throw AdmissibilityError(qlbm::detail::strf(
            "theta3 requires u <= 1/2 (arccos argument u + 1/2 = %.17g left "
            "[-1, 1]); got u = %.17g",
            arg, u));
    }
    return 2.0 * std::acos(arg);
}

double theta4(double u) {
    const double arg = u - 0.5;
    if (arg < -1.0 || arg > 1.0) {
        throw AdmissibilityError(qlbm::detail::strf(
            "theta4 requires u >= -1/2 (arccos argument u - 1/2 = %.17g left "
            "[-1, 1]); got u = %.17g",
            arg, u));
    }
    return 2.0 * std::acos(arg);
}

CollisionAngles collision_angles(const lattice::VelocityField &u,
                                 std::size_t cells) {
    CollisionAngles angles{theta0(), theta2(), {}, {}, {}, u.is_uniform()};
    const std::size_t n = u.is_uniform() ? 1 : u.size();
    if (!u.is_uniform() && n != cells) {
        throw LayoutError(qlbm::detail::strf(
            "velocity field of %zu cells does not match %zu lattice cells",
            n, cells));
    }
    angles.theta1.reserve(n);
    angles.theta3.reserve(n);
    angles.theta4.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double uk = u.is_uniform() ? u.at(0) : u.at(k);
        angles.theta1.push_back(theta1(uk));
        angles.theta3.push_back(theta3(uk));
        angles.theta4.push_back(theta4(uk));
    }
    return angles;
}

void apply_collision(core::StateVector &state, const CollisionAngles &angles) {
    const QubitLayout &layout = state.layout();
    check_three_f_qubits(layout, "collision");
    check_f_register_reset(state);

    const unsigned fq0 = layout.f_qubit(0);
    const unsigned fq1 = layout.f_qubit(1);
    const unsigned fq2 = layout.f_qubit(2);
    const ControlBit sel_00x[] = {{fq1, false}, {fq2, false}};
    const ControlBit sel_10x[] = {{fq1, false}, {fq2, true}};
    const ControlBit sel_11x[] = {{fq1, true}, {fq2, true}};

    // 1. Peel the mover mass off the rest population: |000> picks up
    //    sin(t0/2) on label 001.
    core::apply_gate(state, GateSpec::ry(angles.theta0, fq0));
    // 2. Park the mover mass on label 010 so labels 00x are free again.
    core::swap_f_labels(state, 0b001, 0b010);
    // 3. Split the u-linear correction off the rest population.
    apply_ry_stage(state, fq0, sel_00x, angles.theta1, angles.uniform);
    // 4. Split the parked mover mass into its squared (3/4) and constant
    //    (1/4) parts.
    core::apply_gate(state, GateSpec::ry(angles.theta2, fq0,
                                         {{fq1, true}, {fq2, false}}));
    // 5. Lift the squared part up to label 100.
    core::swap_f_labels(state, 0b011, 0b100);
    // 6. Equal splits preparing the two square completions.
    core::apply_gate(state, GateSpec::h(fq0, {{fq1, true}, {fq2, false}}));
    core::apply_gate(state, GateSpec::h(fq0, {{fq1, false}, {fq2, true}}));
    // 7. Reorder so each completion pair is contiguous.
    core::swap_f_labels(state, 0b101, 0b110);
    // 8. Rotate the completions onto (u +- 1/2); the mover populations now
    //    sit on labels 100/010 (up) and 110/011 (down).
    apply_ry_stage(state, fq0, sel_10x, angles.theta3, angles.uniform);
    apply_ry_stage(state, fq0, sel_11x, angles.theta4, angles.uniform);
}

void apply_streaming(core::StateVector &state) {
    const QubitLayout &layout = state.layout();
    check_three_f_qubits(layout, "streaming");
    const unsigned fq0 = layout.f_qubit(0);
    const unsigned fq1 = layout.f_qubit(1);
    const unsigned fq2 = layout.f_qubit(2);

    const ControlBit up_const[] = {{fq0, false}, {fq1, true}, {fq2, false}};
    const ControlBit up_sq[] = {{fq0, false}, {fq1, false}, {fq2, true}};
    const ControlBit down_const[] = {{fq0, true}, {fq1, true}, {fq2, false}};
    const ControlBit down_sq[] = {{fq0, false}, {fq1, true}, {fq2, true}};

    core::apply_cyclic_shift(state, ShiftDirection::positive, up_const);
    core::apply_cyclic_shift(state, ShiftDirection::positive, up_sq);
    core::apply_cyclic_shift(state, ShiftDirection::negative, down_const);
    core::apply_cyclic_shift(state, ShiftDirection::negative, down_sq);
}

Distributions readout_distributions(std::span<const double> basis_probs,
                                    double norm_sq, std::size_t cells) {
    if (basis_probs.size() != cells * 8) {
        throw LayoutError(qlbm::detail::strf(
            "readout needs 8 probabilities per cell: got %zu for %zu cells",
            basis_probs.size(), cells));
    }
    if (!(norm_sq > 0.0)) {
        throw DomainError("readout requires a positive normalization");
    }
    const auto p = [&](std::uint64_t label, std::size_t k) {
        return basis_probs[label * cells + k];
    };
    Distributions out{lattice::DensityField(cells),
                      lattice::DensityField(cells),
                      lattice::DensityField(cells)};
    for (std::size_t k = 0; k < cells; ++k) {
        // The squared-term labels carry amplitudes scaled by an extra 1/2
        // from the H splits, hence the factor 4 on their probabilities.
        out.f0[k] = norm_sq * p(flabel::rest, k);
        out.f1[k] =
            norm_sq * (4.0 * p(flabel::plus_sq, k) + p(flabel::plus_const, k));
        out.f2[k] = norm_sq * (4.0 * p(flabel::minus_sq, k) +
                               p(flabel::minus_const, k));
    }
    return out;
}

RunResult run(const RunConfig &config, const lattice::DensityField &rho0,
              const lattice::VelocityField &u0) {
    const QubitLayout layout(3, config.pos_qubits);
    const std::size_t cells = layout.cells();
    if (rho0.size() != cells) {
        throw LayoutError(qlbm::detail::strf(
            "initial field of %zu cells does not fit a %zu-cell register",
            rho0.size(), cells));
    }
    if (config.readout == Readout::sampled && config.shots == 0) {
        throw DomainError("sampled readout requires at least one shot");
    }

    RunResult result;
    result.trajectory.reserve(config.steps + 1);
    result.trajectory.push_back({rho0, u0});

    lattice::DensityField rho = rho0;
    lattice::VelocityField u = u0;

    for (unsigned t = 1; t <= config.steps; ++t) {
        CollisionAngles angles;
        try {
            angles = collision_angles(u, cells);
        } catch (const AdmissibilityError &e) {
            throw AdmissibilityError(
                qlbm::detail::strf("step %u: %s", t, e.what()));
        }

        const encoding::EncodedState encoded =
            encoding::encode_sqrt_density(rho, layout);
        StateVector state = encoded.state;
        apply_collision(state, angles);
        apply_streaming(state);

        std::vector<double> probs;
        if (config.readout == Readout::deterministic) {
            probs = core::basis_probabilities(state);
        } else {
            const std::vector<std::uint64_t> counts =
                core::sample_basis_counts(
                    state, config.shots,
                    config.seed.with("readout").with(t));
            probs.resize(counts.size());
            const double n = static_cast<double>(config.shots);
            for (std::size_t i = 0; i < counts.size(); ++i) {
                probs[i] = static_cast<double>(counts[i]) / n;
            }
        }

        const Distributions d =
            readout_distributions(probs, encoded.norm_sq, cells);

        lattice::DensityField rho_new(cells);
        for (std::size_t k = 0; k < cells; ++k) {
            rho_new[k] = d.f0[k] + d.f1[k] + d.f2[k];
        }

        if (config.update_velocity) {
            std::vector<double> u_new(cells);
            for (std::size_t k = 0; k < cells; ++k) {
                if (!(rho_new[k] > 0.0)) {
                    throw DegeneracyError(qlbm::detail::strf(
                        "step %u: cell %zu reconstructed zero density; "
                        "cannot update the velocity moment",
                        t, k));
                }
                u_new[k] = (d.f1[k] - d.f2[k]) / rho_new[k];
            }
            u = lattice::VelocityField::per_cell(std::move(u_new));
        }

        rho = std::move(rho_new);
        result.trajectory.push_back({rho, u});
    }
    return result;
}

} // namespace qlbm::nonlinear
