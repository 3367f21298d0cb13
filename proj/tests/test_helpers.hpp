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

/// \file test_helpers.hpp
/// Shared generators and comparison helpers for the unit-test suites.

#pragma once

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qlbm/lattice.hpp"
#include "qlbm/rng.hpp"
#include "qlbm/statevector.hpp"

namespace qlbm::test {

inline bool contains(const std::string &haystack, const std::string &needle) {
    return haystack.find(needle) != std::string::npos;
}

/// Runs `fn`, expecting it to throw E; returns the message. Sentinel strings
/// mark the failure modes so CHECK(contains(...)) reports something readable.
template <typename E, typename Fn>
std::string message_of(Fn &&fn) {
    try {
        std::forward<Fn>(fn)();
    } catch (const E &e) {
        return e.what();
    } catch (const std::exception &e) {
        return std::string("[wrong exception type: ") + e.what() + "]";
    }
    return "[no exception thrown]";
}

/// Random normalized statevector with complex amplitudes in the unit square.
inline core::StateVector random_state(core::QubitLayout layout,
                                      core::RngStream &rng) {
    auto state = core::StateVector::zeros(layout);
    double total = 0.0;
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        const double re = 2.0 * rng.uniform() - 1.0;
        const double im = 2.0 * rng.uniform() - 1.0;
        state[i] = core::Amplitude{re, im};
        total += re * re + im * im;
    }
    const double scale = 1.0 / std::sqrt(total);
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        state[i] *= scale;
    }
    return state;
}

/// Random density field with values in [lo, hi).
inline lattice::DensityField random_field(std::size_t cells,
                                          core::RngStream &rng,
                                          double lo = 0.05, double hi = 1.0) {
    lattice::DensityField field(cells);
    for (std::size_t k = 0; k < cells; ++k) {
        field[k] = lo + (hi - lo) * rng.uniform();
    }
    return field;
}

inline double max_abs_diff(const std::vector<double> &a,
                           const std::vector<double> &b) {
    REQUIRE(a.size() == b.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

inline double max_abs_diff(const lattice::DensityField &a,
                           const lattice::DensityField &b) {
    return max_abs_diff(a.values, b.values);
}

/// Exact (bitwise) equality of two statevectors, as required of the OpenMP
/// kernels against their serial reference twins.
inline bool states_identical(const core::StateVector &a,
                             const core::StateVector &b) {
    if (a.dim() != b.dim()) {
        return false;
    }
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        if (a[i].real() != b[i].real() || a[i].imag() != b[i].imag()) {
            return false;
        }
    }
    return true;
}

inline double max_amp_diff(const core::StateVector &a,
                           const core::StateVector &b) {
    REQUIRE(a.dim() == b.dim());
    double worst = 0.0;
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

/// Captures everything `fn` writes to std::cout (used to test CLI output).
template <typename Fn>
std::pair<int, std::string> capture_stdout(Fn &&fn) {
    std::ostringstream sink;
    std::streambuf *saved = std::cout.rdbuf(sink.rdbuf());
    int code = -1;
    try {
        code = std::forward<Fn>(fn)();
    } catch (...) {
        std::cout.rdbuf(saved);
        throw;
    }
    std::cout.rdbuf(saved);
    return {code, sink.str()};
}

} // namespace qlbm::test
