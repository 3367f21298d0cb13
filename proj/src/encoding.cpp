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

#include "qlbm/encoding.hpp"

#include <cmath>

#include "qlbm/errors.hpp"

namespace qlbm::encoding {

EncodedState encode_sqrt_density(const lattice::DensityField &rho,
                                 core::QubitLayout layout) {
    if (rho.size() != layout.cells()) {
        throw LayoutError(detail::strf(
            "field of %zu cells does not fit a %llu-cell position register",
            rho.size(), static_cast<unsigned long long>(layout.cells())));
    }

    double norm_sq = 0.0;
    for (std::size_t k = 0; k < rho.size(); ++k) {
        if (rho[k] < 0.0) {
            throw DomainError(detail::strf(
                "cell %zu has negative density %.17g; square-root encoding "
                "requires rho >= 0",
                k, rho[k]));
        }
        norm_sq += rho[k];
    }
    if (!(norm_sq > 0.0)) {
        throw DomainError("cannot encode a field with zero total mass");
    }

    core::StateVector state = core::StateVector::zeros(layout);
    const double inv_c = 1.0 / std::sqrt(norm_sq);
    for (std::size_t k = 0; k < rho.size(); ++k) {
        state.at(0, k) = std::sqrt(rho[k]) * inv_c;
    }
    return {std::move(state), norm_sq};
}

lattice::DensityField decode_density(std::span<const double> position_probs,
                                     double norm_sq) {
    if (!(norm_sq > 0.0)) {
        throw DomainError("decoding requires a positive normalization");
    }
    double total = 0.0;
    lattice::DensityField rho(position_probs.size());
    for (std::size_t k = 0; k < position_probs.size(); ++k) {
        if (position_probs[k] < 0.0) {
            throw DomainError(detail::strf(
                "probability of cell %zu is negative (%.17g)", k,
                position_probs[k]));
        }
        total += position_probs[k];
        rho[k] = norm_sq * position_probs[k];
    }
    // Less than one is fine (mass on discarded labels); more than one means
    // the caller passed something that is not a probability table.
    if (total > 1.0 + 1e-9) {
        throw DomainError(detail::strf(
            "probabilities sum to %.17g > 1; not a position distribution",
            total));
    }
    return rho;
}

DecodedDensity decode_density(const core::ShotHistogram &histogram,
                              double norm_sq) {
    if (!(norm_sq > 0.0)) {
        throw DomainError("decoding requires a positive normalization");
    }
    if (histogram.shots == 0) {
        throw DomainError("histogram holds no shots");
    }
    const double n = static_cast<double>(histogram.shots);
    DecodedDensity out{lattice::DensityField(histogram.counts.size()),
                       std::vector<double>(histogram.counts.size())};
    for (std::size_t k = 0; k < histogram.counts.size(); ++k) {
        const double p = static_cast<double>(histogram.counts[k]) / n;
        out.density[k] = norm_sq * p;
        out.std_error[k] = norm_sq * std::sqrt(p * (1.0 - p) / n);
    }
    return out;
}

} // namespace qlbm::encoding
