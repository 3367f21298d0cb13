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

#include "qlbm/harness/experiment.hpp"

#include <cmath>
#include <utility>

#include "qlbm/linear.hpp"
#include "qlbm/nonlinear.hpp"

namespace qlbm::harness {
namespace {

lattice::GaussianParams gaussian_params(const ExperimentConfig &config) {
    return {config.rho0, config.ambient, *config.x0, config.sigma0,
            config.diffusivity};
}

/// Classical solver evolved `steps` times at fixed (ADE) or self-consistent
/// velocity.
lattice::DensityField run_classical(const ExperimentConfig &config,
                                    const lattice::DensityField &initial) {
    const lattice::EquilibriumMode mode =
        active_family(config) == Collision::linear
            ? lattice::EquilibriumMode::linear
            : lattice::EquilibriumMode::nonlinear;
    lattice::DensityField rho = initial;
    lattice::VelocityField u = lattice::VelocityField::uniform(config.u);
    for (unsigned t = 0; t < config.steps; ++t) {
        lattice::StepResult next =
            lattice::classical_step(rho, u, mode, config.update_velocity);
        rho = std::move(next.rho);
        u = std::move(next.u);
    }
    return rho;
}

void run_quantum(const ExperimentConfig &config,
                 const lattice::DensityField &initial,
                 ExperimentResult &result) {
    const core::SeedKey seed{config.seed};
    if (active_family(config) == Collision::linear) {
        linear::RunConfig rc;
        rc.pos_qubits = config.pos_qubits;
        rc.steps = config.steps;
        rc.u = lattice::VelocityField::uniform(config.u);
        rc.backend = config.backend == Backend::exact
                         ? linear::Backend::exact
                         : linear::Backend::shots;
        rc.shots = config.shots;
        rc.seed = seed;
        linear::RunResult run = linear::run(rc, initial);
        result.rho_quantum = std::move(run.trajectory.back().density);
        result.quantum_std_error = std::move(run.trajectory.back().std_error);
        if (config.backend == Backend::shots) {
            result.rng_streams.push_back(detail::strf(
                "record/%u/shot/{0..%llu}", config.steps,
                static_cast<unsigned long long>(config.shots - 1)));
        }
    } else {
        nonlinear::RunConfig rc;
        rc.pos_qubits = config.pos_qubits;
        rc.steps = config.steps;
        rc.readout = config.backend == Backend::exact
                         ? nonlinear::Readout::deterministic
                         : nonlinear::Readout::sampled;
        rc.shots = config.shots;
        rc.seed = seed;
        rc.update_velocity = config.update_velocity;
        nonlinear::RunResult run = nonlinear::run(
            rc, initial, lattice::VelocityField::uniform(config.u));
        result.rho_quantum = std::move(run.trajectory.back().rho);
        if (config.backend == Backend::shots) {
            for (unsigned t = 1; t <= config.steps; ++t) {
                result.rng_streams.push_back(
                    detail::strf("readout/%u", t));
            }
        }
    }
}

} // namespace

ErrorReport compare_fields(const lattice::DensityField &value,
                           const lattice::DensityField &reference) {
    if (value.size() != reference.size()) {
        throw LayoutError(detail::strf(
            "cannot compare fields of %zu and %zu cells", value.size(),
            reference.size()));
    }
    ErrorReport report;
    report.residuals.resize(value.size());
    double sum_sq = 0.0;
    double ref_sq = 0.0;
    for (std::size_t k = 0; k < value.size(); ++k) {
        const double r = value[k] - reference[k];
        report.residuals[k] = r;
        sum_sq += r * r;
        ref_sq += reference[k] * reference[k];
        report.linf = std::max(report.linf, std::abs(r));
    }
    report.l2 = std::sqrt(sum_sq);
    report.l2_relative =
        ref_sq > 0.0 ? report.l2 / std::sqrt(ref_sq) : report.l2;
    return report;
}

ExperimentResult run_experiment(const ExperimentConfig &config) {
    ExperimentConfig resolved = config;
    validate_config(resolved);

    const std::size_t cells = config_cells(resolved);
    const lattice::GaussianParams params = gaussian_params(resolved);
    const lattice::DensityField initial =
        lattice::initial_gaussian(params, cells);
    const double t_final = static_cast<double>(resolved.steps);

    ExperimentResult result;
    result.config = resolved;

    switch (resolved.mode) {
        case Mode::quantum_linear:
        case Mode::quantum_nonlinear:
            run_quantum(resolved, initial, result);
            break;
        case Mode::classical_linear:
        case Mode::classical_nonlinear:
            result.rho_classical = run_classical(resolved, initial);
            break;
        case Mode::analytic:
            result.rho_analytic = lattice::analytic_gaussian_field(
                t_final, resolved.u, params, cells);
            break;
        case Mode::compare: {
            run_quantum(resolved, initial, result);
            result.rho_classical = run_classical(resolved, initial);
            result.rho_analytic = lattice::analytic_gaussian_field(
                t_final, resolved.u, params, cells);
            result.quantum_vs_classical =
                compare_fields(*result.rho_quantum, *result.rho_classical);
            result.quantum_vs_analytic =
                compare_fields(*result.rho_quantum, *result.rho_analytic);
            result.classical_vs_analytic =
                compare_fields(*result.rho_classical, *result.rho_analytic);
            break;
        }
    }
    return result;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig &base,
                                const std::string &param,
                                const std::vector<std::uint64_t> &values) {
    if (values.empty()) {
        throw ConfigError("sweep needs at least one value");
    }
    const bool sweep_shots = param == "shots";
    if (!sweep_shots && param != "steps") {
        throw ConfigError(detail::strf(
            "sweep parameter must be 'shots' or 'steps'; got '%s'",
            param.c_str()));
    }

    std::vector<SweepRow> rows;
    rows.reserve(values.size());
    for (std::uint64_t value : values) {
        ExperimentConfig config = base;
        config.mode = Mode::compare;
        if (sweep_shots) {
            config.shots = value;
            config.backend = Backend::shots; // sweeping shots implies sampling
        } else {
            if (value > (std::uint64_t{1} << 20)) {
                throw ConfigError(detail::strf(
                    "sweep step count %llu exceeds the %u-step cap",
                    static_cast<unsigned long long>(value), 1u << 20));
            }
            config.steps = static_cast<unsigned>(value);
        }
        const ExperimentResult result = run_experiment(config);
        const ErrorReport &report = *result.quantum_vs_classical;
        rows.push_back({value, report.l2, report.linf, report.l2_relative});
    }
    return rows;
}

} // namespace qlbm::harness
