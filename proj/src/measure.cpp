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

#include "qlbm/measure.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "qlbm/errors.hpp"
#include "qlbm/gates_detail.hpp"

namespace qlbm::core {
namespace {

using detail::kParallelCutoff;

/// Renormalization refuses branches below this probability: dividing by such
/// a norm would amplify noise past any physical meaning.
constexpr double kDegenerateProb = 1e-300;

/// Shots are drawn in fixed-size chunks, each owning a derived RNG
/// substream, so histograms do not depend on the number of workers.
constexpr std::uint64_t kShotChunk = 8192;

std::vector<double> cumulative(std::span<const double> probs) {
    std::vector<double> cdf(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cdf.begin());
    if (cdf.empty() || !(cdf.back() > 0.0)) {
        throw DegeneracyError("cannot sample: distribution has no mass");
    }
    return cdf;
}

/// Chunked categorical sampling shared by the two sample_* entry points.
std::vector<std::uint64_t> sample_counts(std::span<const double> probs,
                                         std::uint64_t shots, SeedKey key) {
    if (shots == 0) {
        throw DomainError("sampling requires at least one shot");
    }
    const std::vector<double> cdf = cumulative(probs);
    std::vector<std::uint64_t> counts(probs.size(), 0);
    const std::int64_t chunks =
        static_cast<std::int64_t>((shots + kShotChunk - 1) / kShotChunk);

#pragma omp parallel
    {
        std::vector<std::uint64_t> local(probs.size(), 0);
#pragma omp for schedule(static)
        for (std::int64_t chunk = 0; chunk < chunks; ++chunk) {
            RngStream rng(key.with(static_cast<std::uint64_t>(chunk)));
            const std::uint64_t begin =
                static_cast<std::uint64_t>(chunk) * kShotChunk;
            const std::uint64_t n = std::min(kShotChunk, shots - begin);
            for (std::uint64_t s = 0; s < n; ++s) {
                ++local[rng.sample_cdf(cdf)];
            }
        }
#pragma omp critical
        {
            for (std::size_t i = 0; i < counts.size(); ++i) {
                counts[i] += local[i];
            }
        }
    }
    return counts;
}

} // namespace

std::vector<double> f_probabilities(const StateVector &state) {
    const QubitLayout &layout = state.layout();
    const std::int64_t f_dim = static_cast<std::int64_t>(layout.f_dim());
    const std::uint64_t cells = layout.cells();
    const Amplitude *amps = state.data();
    std::vector<double> probs(static_cast<std::size_t>(f_dim), 0.0);

    // One contiguous block per f label; each block is summed serially so the
    // result does not depend on the thread count.
#pragma omp parallel for schedule(static) \
    if (static_cast<std::int64_t>(cells) >= kParallelCutoff)
    for (std::int64_t f = 0; f < f_dim; ++f) {
        const Amplitude *block =
            amps + (static_cast<std::uint64_t>(f) << layout.pos_qubits);
        double total = 0.0;
        for (std::uint64_t k = 0; k < cells; ++k) {
            total += std::norm(block[k]);
        }
        probs[static_cast<std::size_t>(f)] = total;
    }
    return probs;
}

std::vector<double> position_probabilities(const StateVector &state) {
    const QubitLayout &layout = state.layout();
    const std::int64_t cells = static_cast<std::int64_t>(layout.cells());
    const std::uint64_t f_dim = layout.f_dim();
    const Amplitude *amps = state.data();
    std::vector<double> probs(static_cast<std::size_t>(cells), 0.0);

#pragma omp parallel for schedule(static) if (cells >= kParallelCutoff)
    for (std::int64_t k = 0; k < cells; ++k) {
        double total = 0.0;
        for (std::uint64_t f = 0; f < f_dim; ++f) {
            total += std::norm(
                amps[(f << layout.pos_qubits) | static_cast<std::uint64_t>(k)]);
        }
        probs[static_cast<std::size_t>(k)] = total;
    }
    return probs;
}

std::vector<double> basis_probabilities(const StateVector &state) {
    const std::int64_t dim = static_cast<std::int64_t>(state.dim());
    const Amplitude *amps = state.data();
    std::vector<double> probs(static_cast<std::size_t>(dim));

#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
    for (std::int64_t i = 0; i < dim; ++i) {
        probs[static_cast<std::size_t>(i)] = std::norm(amps[i]);
    }
    return probs;
}

void collapse_f_and_reset(StateVector &state, std::uint64_t outcome) {
    const QubitLayout &layout = state.layout();
    if (outcome >= layout.f_dim()) {
        throw LayoutError(qlbm::detail::strf(
            "f outcome %llu outside register of %llu labels",
            static_cast<unsigned long long>(outcome),
            static_cast<unsigned long long>(layout.f_dim())));
    }
    Amplitude *amps = state.data();
    const std::uint64_t cells = layout.cells();
    const Amplitude *branch = amps + (outcome << layout.pos_qubits);

    double prob = 0.0;
    for (std::uint64_t k = 0; k < cells; ++k) {
        prob += std::norm(branch[k]);
    }
    if (prob < kDegenerateProb) {
        throw DegeneracyError(qlbm::detail::strf(
            "f-register branch %llu has probability %.3e; too small to "
            "renormalize",
            static_cast<unsigned long long>(outcome), prob));
    }

    const double inv = 1.0 / std::sqrt(prob);
    // Move the surviving branch into the f=0 block (the reset), scale it,
    // and clear the rest of the state.
    for (std::uint64_t k = 0; k < cells; ++k) {
        amps[k] = branch[k] * inv;
    }
    for (std::uint64_t i = cells; i < state.dim(); ++i) {
        amps[i] = Amplitude{0.0, 0.0};
    }
}

FMeasurement measure_f_and_reset(StateVector &state, RngStream &rng) {
    const std::vector<double> probs = f_probabilities(state);

    std::uint64_t last_occupied = 0;
    bool any = false;
    for (std::size_t f = 0; f < probs.size(); ++f) {
        if (probs[f] > 0.0) {
            last_occupied = f;
            any = true;
        }
    }
    if (!any) {
        throw DegeneracyError("f-register measurement on a zero-norm state");
    }

    const double r = rng.uniform();
    double acc = 0.0;
    std::uint64_t outcome = last_occupied; // floating-point tail fallback
    for (std::size_t f = 0; f < probs.size(); ++f) {
        acc += probs[f];
        if (r < acc) {
            outcome = f;
            break;
        }
    }
    collapse_f_and_reset(state, outcome);
    return {outcome, probs[outcome]};
}

ShotHistogram sample_positions(const StateVector &state, std::uint64_t shots,
                               SeedKey key, double norm_sq) {
    const std::vector<double> probs = position_probabilities(state);
    return {sample_counts(probs, shots, key), shots, norm_sq};
}

std::vector<std::uint64_t> sample_basis_counts(const StateVector &state,
                                               std::uint64_t shots,
                                               SeedKey key) {
    const std::vector<double> probs = basis_probabilities(state);
    return sample_counts(probs, shots, key);
}

} // namespace qlbm::core
