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

/// \file config.hpp
/// Experiment configuration: key=value parsing, validation, and canonical
/// emission. Emitted text parses back to an identical config, so a run's
/// manifest is itself a valid config file.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlbm/errors.hpp"

namespace qlbm::harness {

/// What the experiment computes. `compare` runs the quantum solver, the
/// matching classical solver, and the analytic solution side by side.
enum class Mode {
    quantum_linear,
    quantum_nonlinear,
    classical_linear,
    classical_nonlinear,
    analytic,
    compare,
};

/// Collision family a `compare` run pits against its classical twin.
enum class Collision { linear, nonlinear };

/// How quantum probabilities are obtained.
enum class Backend { exact, shots };

struct ExperimentConfig {
    Mode mode = Mode::compare;
    Collision collision = Collision::linear;
    unsigned pos_qubits = 5; // key "M"
    unsigned steps = 20;
    double u = 0.3;
    std::uint64_t shots = 900000;
    std::uint64_t seed = 12345;
    Backend backend = Backend::exact;
    bool update_velocity = false;

    // Gaussian-hill initial condition.
    double rho0 = 0.1;
    double ambient = 0.1;
    std::optional<double> x0; // default: center of the domain, 2^(M-1)
    double sigma0 = 4.0;
    double diffusivity = 1.0 / 6.0; // key "D"

    std::string out; // output directory; empty writes to stdout
    bool plot = false;

    bool operator==(const ExperimentConfig &) const = default;
};

/// Key=value pairs in source order (later pairs override earlier ones).
using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Reads a config file: one key=value per line, '#' starts a comment, blank
/// lines ignored. Throws ConfigError on unreadable files or malformed lines.
KeyValues read_config_file(const std::string &path);

/// Parses key=value text in the same format as a config file.
KeyValues read_config_text(const std::string &text);

/// Applies pairs onto defaults, then validates. Unknown keys, unparsable
/// values, and cross-field violations (velocity outside the active collision
/// family's admissible window, zero shots with the shot backend, ...) throw
/// ConfigError naming the key and the violated bound. Resolves x0 to the
/// domain center if unset.
ExperimentConfig parse_config(const KeyValues &pairs);

/// Cross-field validation used by parse_config; also callable on hand-built
/// configs. Resolves x0 and throws ConfigError on violations.
void validate_config(ExperimentConfig &config);

/// The collision family the config exercises (from mode, or from the
/// `collision` key in compare mode). analytic mode reports the `collision`
/// key's family, whose admissibility it does not constrain.
Collision active_family(const ExperimentConfig &config);

/// Canonical key=value rendering; parse_config(read_config_text(s)) returns
/// the same config.
std::string emit_config(const ExperimentConfig &config);

std::string to_string(Mode mode);
std::string to_string(Collision collision);
std::string to_string(Backend backend);

/// Number of lattice cells implied by the config.
std::size_t config_cells(const ExperimentConfig &config);

} // namespace qlbm::harness
