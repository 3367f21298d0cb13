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

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "qlbm/encoding.hpp"
#include "qlbm/lattice.hpp"
#include "qlbm/measure.hpp"

#include "test_helpers.hpp"

using namespace qlbm;
using namespace qlbm::test;
using core::QubitLayout;
using core::RngStream;
using core::SeedKey;
using lattice::DensityField;

TEST_SUITE("encoding") {

TEST_CASE("square-root amplitudes with the norm kept classically") {
    const QubitLayout layout(1, 2);

    // Uniform field: every amplitude 1/2, total mass 4.
    const auto uniform = encoding::encode_sqrt_density(
        DensityField({1.0, 1.0, 1.0, 1.0}), layout);
    CHECK(uniform.norm_sq == doctest::Approx(4.0).epsilon(1e-15));
    for (std::uint64_t k = 0; k < 4; ++k) {
        CHECK(uniform.state.at(0, k).real() ==
              doctest::Approx(0.5).epsilon(1e-15));
        CHECK(uniform.state.at(0, k).imag() == 0.0);
        CHECK(uniform.state.at(1, k) == core::Amplitude{0.0, 0.0});
    }

    // Zero-padded field: amplitudes sqrt(rho_k / C^2), C^2 = 0.4.
    const auto padded = encoding::encode_sqrt_density(
        DensityField({0.2, 0.1, 0.1, 0.0}), layout);
    CHECK(padded.norm_sq == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(padded.state.at(0, 0).real() ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(padded.state.at(0, 1).real() ==
          doctest::Approx(std::sqrt(0.25)).epsilon(1e-15));
    CHECK(padded.state.at(0, 2).real() ==
          doctest::Approx(std::sqrt(0.25)).epsilon(1e-15));
    CHECK(padded.state.at(0, 3) == core::Amplitude{0.0, 0.0});
    CHECK(padded.state.norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("default Gaussian hill has the frozen normalization") {
    const DensityField hill =
        lattice::initial_gaussian(lattice::GaussianParams{}, 32);
    const auto encoded =
        encoding::encode_sqrt_density(hill, QubitLayout(2, 5));
    CHECK(encoded.norm_sq ==
          doctest::Approx(4.202582283138524).epsilon(1e-14));
    CHECK(encoded.norm_sq ==
          doctest::Approx(hill.total_mass()).epsilon(1e-15));
}

TEST_CASE("decode inverts encode on random fields") {
    RngStream rng(SeedKey{101}.with("roundtrip"));
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned m = 1 + trial % 5;
        const QubitLayout layout(2, m);
        const DensityField field =
            random_field(layout.cells(), rng, 0.0, 2.0);
        const auto encoded = encoding::encode_sqrt_density(field, layout);
        const DensityField decoded = encoding::decode_density(
            core::position_probabilities(encoded.state), encoded.norm_sq);
        REQUIRE(decoded.size() == field.size());
        CHECK(max_abs_diff(decoded, field) < 1e-12);
    }
}

TEST_CASE("scaling a field scales only the bookkept norm") {
    RngStream rng(SeedKey{101}.with("scale"));
    const QubitLayout layout(1, 3);
    const DensityField field = random_field(layout.cells(), rng);
    DensityField scaled = field;
    for (std::size_t k = 0; k < scaled.size(); ++k) {
        scaled[k] *= 7.5;
    }
    const auto a = encoding::encode_sqrt_density(field, layout);
    const auto b = encoding::encode_sqrt_density(scaled, layout);
    CHECK(b.norm_sq == doctest::Approx(7.5 * a.norm_sq).epsilon(1e-14));
    CHECK(max_amp_diff(a.state, b.state) < 1e-14);
}

TEST_CASE("encode validates length, sign, and total mass") {
    const QubitLayout layout(1, 2);
    CHECK_THROWS_AS(encoding::encode_sqrt_density(
                        DensityField({1.0, 2.0, 3.0}), layout),
                    LayoutError);

    const std::string msg = message_of<DomainError>([&] {
        encoding::encode_sqrt_density(DensityField({0.1, 0.2, -0.3, 0.4}),
                                      layout);
    });
    CHECK(contains(msg, "cell 2"));
    CHECK(contains(msg, "negative"));

    CHECK_THROWS_AS(encoding::encode_sqrt_density(DensityField(4, 0.0),
                                                  layout),
                    DomainError);
}

TEST_CASE("decode validates probabilities and normalization") {
    const std::vector<double> negative = {0.5, -0.1, 0.6};
    CHECK_THROWS_AS(encoding::decode_density(negative, 1.0), DomainError);

    const std::vector<double> too_much = {0.7, 0.7};
    CHECK_THROWS_AS(encoding::decode_density(too_much, 1.0), DomainError);

    const std::vector<double> fine = {0.25, 0.25};
    CHECK_THROWS_AS(encoding::decode_density(fine, 0.0), DomainError);
    CHECK_THROWS_AS(encoding::decode_density(fine, -1.0), DomainError);

    // Probability mass below one is allowed: it sits on discarded labels.
    const DensityField partial = encoding::decode_density(fine, 2.0);
    CHECK(partial[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(partial[1] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("histogram decode: hand-checked estimate and binomial error") {
    core::ShotHistogram hist;
    hist.counts = {450000, 450000};
    hist.shots = 900000;

    const auto decoded = encoding::decode_density(hist, 0.4);
    CHECK(decoded.density[0] == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(decoded.density[1] == doctest::Approx(0.2).epsilon(1e-15));
    // 0.4 * sqrt(0.5 * 0.5 / 900000)
    CHECK(decoded.std_error[0] ==
          doctest::Approx(2.1081851067789195e-4).epsilon(1e-13));
    CHECK(decoded.std_error[1] ==
          doctest::Approx(2.1081851067789195e-4).epsilon(1e-13));

    core::ShotHistogram empty;
    empty.counts = {0, 0};
    empty.shots = 0;
    CHECK_THROWS_AS(encoding::decode_density(empty, 1.0), DomainError);
    CHECK_THROWS_AS(encoding::decode_density(hist, 0.0), DomainError);
}

TEST_CASE("sampled decode converges to the exact decode") {
    const QubitLayout layout(2, 2);
    const DensityField field({0.3, 0.1, 0.45, 0.15});
    const auto encoded = encoding::encode_sqrt_density(field, layout);

    const std::uint64_t shots = 200000;
    const core::ShotHistogram hist = core::sample_positions(
        encoded.state, shots, SeedKey{103}, encoded.norm_sq);
    const auto decoded = encoding::decode_density(hist, encoded.norm_sq);

    for (std::size_t k = 0; k < field.size(); ++k) {
        REQUIRE(decoded.std_error[k] > 0.0);
        CHECK(std::abs(decoded.density[k] - field[k]) <
              5.0 * decoded.std_error[k]);
    }
}

} // TEST_SUITE
