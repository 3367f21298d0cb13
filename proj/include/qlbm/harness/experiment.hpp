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

/// \file experiment.hpp
/// Drives full experiments from a validated config: builds the Gaussian-hill
/// initial condition, dispatches to the requested solver(s), and attaches
/// error reports.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlbm/harness/config.hpp"
#include "qlbm/lattice.hpp"

namespace qlbm::harness {

/// Error norms of `value` against a reference field.
struct ErrorReport {
    double l2 = 0.0;
    double linf = 0.0;
    double l2_relative = 0.0;           // l2 / ||reference||_2
    std::vector<double> residuals;      // value - reference, per cell
};

ErrorReport compare_fields(const lattice::DensityField &value,
                           const lattice::DensityField &reference);

/// Final densities of an experiment; fields are present per mode. Sweep and
/// CSV emission key off which optionals are set.
struct ExperimentResult {
    ExperimentConfig config; // as resolved (x0 filled in)
    std::optional<lattice::DensityField> rho_quantum;
    std::optional<lattice::DensityField> rho_classical;
    std::optional<lattice::DensityField> rho_analytic;
    std::vector<double> quantum_std_error; // shot backends only
    std::optional<ErrorReport> quantum_vs_classical;
    std::optional<ErrorReport> quantum_vs_analytic;
    std::optional<ErrorReport> classical_vs_analytic;
    /// Names of the RNG substreams the run consumed (recorded in the
    /// manifest so a run's randomness is auditable).
    std::vector<std::string> rng_streams;
};

/// Runs the experiment described by `config`. Inputs are never mutated; all
/// solvers receive copies of the shared initial condition.
ExperimentResult run_experiment(const ExperimentConfig &config);

/// One row of a parameter sweep: the swept value and the quantum-vs-
/// classical error norms of a compare run at that value.
struct SweepRow {
    std::uint64_t value;
    double l2;
    double linf;
    double l2_relative;
};

/// Sweeps `param` ("shots" or "steps") over `values`, forcing compare mode.
std::vector<SweepRow> run_sweep(const ExperimentConfig &base,
                                const std::string &param,
                                const std::vector<std::uint64_t> &values);

} // namespace qlbm::harness
