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

/// \file encoding.hpp
/// Square-root amplitude encoding of density fields.
///
/// A field rho is loaded as amplitude(f=0, k) = sqrt(rho_k) / C with
/// C^2 = sum_k rho_k, so measuring cell k has probability rho_k / C^2 and the
/// field is recovered as rho_k = C^2 * p_k. C^2 is the piece of classical
/// bookkeeping that must travel with every state and histogram.

#pragma once

#include <span>
#include <vector>

#include "qlbm/lattice.hpp"
#include "qlbm/measure.hpp"
#include "qlbm/statevector.hpp"

namespace qlbm::encoding {

/// An encoded density: the prepared state plus its normalization C^2.
struct EncodedState {
    core::StateVector state;
    double norm_sq;
};

/// Loads sqrt(rho_k)/C into the f=0 block of a fresh state. The field length
/// must equal the layout's cell count; values must be nonnegative with
/// positive total mass.
EncodedState encode_sqrt_density(const lattice::DensityField &rho,
                                 core::QubitLayout layout);

/// Recovers rho_k = norm_sq * p_k from exact position probabilities. The
/// probabilities may sum to less than one (discarded-label mass), but not to
/// more than 1 + 1e-9.
lattice::DensityField decode_density(std::span<const double> position_probs,
                                     double norm_sq);

/// A density estimated from counts, with its per-cell binomial standard
/// error norm_sq * sqrt(p_hat (1 - p_hat) / shots).
struct DecodedDensity {
    lattice::DensityField density;
    std::vector<double> std_error;
};

/// Recovers the density from a measured histogram: rho_hat_k =
/// norm_sq * counts_k / shots.
DecodedDensity decode_density(const core::ShotHistogram &histogram,
                              double norm_sq);

} // namespace qlbm::encoding
