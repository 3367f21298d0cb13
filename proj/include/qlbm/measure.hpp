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

/// \file measure.hpp
/// Measurement, collapse, and sampling on statevectors.

#pragma once

#include <cstdint>
#include <vector>

#include "qlbm/rng.hpp"
#include "qlbm/statevector.hpp"

namespace qlbm::core {

/// Counts of position-register measurement outcomes, one bin per cell.
/// norm_sq carries the encoding normalization so the histogram can be decoded
/// back to densities without the original state.
struct ShotHistogram {
    std::vector<std::uint64_t> counts;
    std::uint64_t shots = 0;
    double norm_sq = 1.0;
};

/// Outcome of a mid-circuit f-register measurement.
struct FMeasurement {
    std::uint64_t outcome;
    double probability;
};

/// Marginal probability of each f-register label.
std::vector<double> f_probabilities(const StateVector &state);

/// Marginal probability of each cell (summed over f labels).
std::vector<double> position_probabilities(const StateVector &state);

/// |amplitude|^2 of every (f, k) basis state, indexed like the state.
std::vector<double> basis_probabilities(const StateVector &state);

/// Measures the f register, collapses the state onto the observed label,
/// renormalizes, and relabels that branch to f = 0 (the reset). Throws
/// DegeneracyError if the selected branch has no recoverable mass.
FMeasurement measure_f_and_reset(StateVector &state, RngStream &rng);

/// Deterministically collapses onto f label `outcome`, renormalizes, and
/// resets the label to 0. Throws DegeneracyError if that branch's probability
/// is below 1e-300.
void collapse_f_and_reset(StateVector &state, std::uint64_t outcome);

/// Draws `shots` position-register samples from `state`'s position marginal.
/// Fixed-size chunks own derived substreams of `key`, so the counts are
/// reproducible and independent of how many threads run the chunks.
ShotHistogram sample_positions(const StateVector &state, std::uint64_t shots,
                               SeedKey key, double norm_sq = 1.0);

/// Draws `shots` full-register samples; returns one count per basis state.
std::vector<std::uint64_t> sample_basis_counts(const StateVector &state,
                                               std::uint64_t shots,
                                               SeedKey key);

} // namespace qlbm::core
