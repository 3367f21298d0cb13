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

#include "qlbm/harness/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "qlbm/lattice.hpp"

namespace qlbm::harness {
namespace {

std::string trim(const std::string &s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
        ++begin;
    }
    while (end > begin &&
           std::isspace(static_cast<unsigned char>(s[end - 1]))) {
        --end;
    }
    return s.substr(begin, end - begin);
}

double parse_double(const std::string &key, const std::string &value) {
    const std::string v = trim(value);
    if (v.empty()) {
        throw ConfigError(detail::strf("key '%s' has an empty value",
                                       key.c_str()));
    }
    char *end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size() || !std::isfinite(x)) {
        throw ConfigError(detail::strf(
            "key '%s' needs a finite real number; got '%s'", key.c_str(),
            v.c_str()));
    }
    return x;
}

std::uint64_t parse_u64(const std::string &key, const std::string &value) {
    const std::string v = trim(value);
    if (v.empty() || v[0] == '-' || v[0] == '+') {
        throw ConfigError(detail::strf(
            "key '%s' needs a nonnegative integer; got '%s'", key.c_str(),
            value.c_str()));
    }
    char *end = nullptr;
    const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
    if (end != v.c_str() + v.size()) {
        throw ConfigError(detail::strf(
            "key '%s' needs a nonnegative integer; got '%s'", key.c_str(),
            v.c_str()));
    }
    return x;
}

unsigned parse_unsigned(const std::string &key, const std::string &value,
                        std::uint64_t max) {
    const std::uint64_t x = parse_u64(key, value);
    if (x > max) {
        throw ConfigError(detail::strf(
            "key '%s' must be at most %llu; got %llu", key.c_str(),
            static_cast<unsigned long long>(max),
            static_cast<unsigned long long>(x)));
    }
    return static_cast<unsigned>(x);
}

bool parse_bool(const std::string &key, const std::string &value) {
    const std::string v = trim(value);
    if (v == "true" || v == "1") {
        return true;
    }
    if (v == "false" || v == "0") {
        return false;
    }
    throw ConfigError(detail::strf(
        "key '%s' needs true/false (or 1/0); got '%s'", key.c_str(),
        v.c_str()));
}

Mode parse_mode(const std::string &value) {
    if (value == "quantum_linear") return Mode::quantum_linear;
    if (value == "quantum_nonlinear") return Mode::quantum_nonlinear;
    if (value == "classical_linear") return Mode::classical_linear;
    if (value == "classical_nonlinear") return Mode::classical_nonlinear;
    if (value == "analytic") return Mode::analytic;
    if (value == "compare") return Mode::compare;
    throw ConfigError(detail::strf(
        "key 'mode' must be one of quantum_linear, quantum_nonlinear, "
        "classical_linear, classical_nonlinear, analytic, compare; got '%s'",
        value.c_str()));
}

Collision parse_collision(const std::string &value) {
    if (value == "linear") return Collision::linear;
    if (value == "nonlinear") return Collision::nonlinear;
    throw ConfigError(detail::strf(
        "key 'collision' must be linear or nonlinear; got '%s'",
        value.c_str()));
}

Backend parse_backend(const std::string &value) {
    if (value == "exact") return Backend::exact;
    if (value == "shots") return Backend::shots;
    throw ConfigError(detail::strf(
        "key 'backend' must be exact or shots; got '%s'", value.c_str()));
}

void set_key(ExperimentConfig &config, const std::string &key,
             const std::string &value) {
    if (key == "mode") {
        config.mode = parse_mode(trim(value));
    } else if (key == "collision") {
        config.collision = parse_collision(trim(value));
    } else if (key == "M") {
        config.pos_qubits = parse_unsigned(key, value, 24);
    } else if (key == "steps") {
        config.steps = parse_unsigned(key, value, 1u << 20);
    } else if (key == "u") {
        config.u = parse_double(key, value);
    } else if (key == "shots") {
        config.shots = parse_u64(key, value);
    } else if (key == "seed") {
        config.seed = parse_u64(key, value);
    } else if (key == "backend") {
        config.backend = parse_backend(trim(value));
    } else if (key == "update_velocity") {
        config.update_velocity = parse_bool(key, value);
    } else if (key == "rho0") {
        config.rho0 = parse_double(key, value);
    } else if (key == "ambient") {
        config.ambient = parse_double(key, value);
    } else if (key == "x0") {
        config.x0 = parse_double(key, value);
    } else if (key == "sigma0") {
        config.sigma0 = parse_double(key, value);
    } else if (key == "D") {
        config.diffusivity = parse_double(key, value);
    } else if (key == "out") {
        config.out = trim(value);
    } else if (key == "plot") {
        config.plot = parse_bool(key, value);
    } else {
        throw ConfigError(detail::strf("unknown config key '%s'",
                                       key.c_str()));
    }
}

} // namespace

KeyValues read_config_text(const std::string &text) {
    KeyValues pairs;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(detail::strf(
                "config line %zu is not key=value: '%s'", lineno,
                line.c_str()));
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(detail::strf(
                "config line %zu has an empty key", lineno));
        }
        pairs.emplace_back(key, value);
    }
    return pairs;
}

KeyValues read_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(detail::strf("cannot read config file '%s'",
                                       path.c_str()));
    }
    std::ostringstream text;
    text << in.rdbuf();
    return read_config_text(text.str());
}

Collision active_family(const ExperimentConfig &config) {
    switch (config.mode) {
        case Mode::quantum_linear:
        case Mode::classical_linear:
            return Collision::linear;
        case Mode::quantum_nonlinear:
        case Mode::classical_nonlinear:
            return Collision::nonlinear;
        case Mode::analytic:
        case Mode::compare:
            return config.collision;
    }
    throw ConfigError("unknown mode");
}

void validate_config(ExperimentConfig &config) {
    // pos_qubits and steps are range-checked at parse time; re-check here so
    // hand-built configs get the same guarantees.
    if (config.pos_qubits < 1 || config.pos_qubits > 24) {
        throw ConfigError(detail::strf(
            "M must be in [1, 24] (position-register bound); got %u",
            config.pos_qubits));
    }
    if (!(config.sigma0 > 0.0)) {
        throw ConfigError(detail::strf(
            "sigma0 must be positive; got %.17g", config.sigma0));
    }
    if (config.rho0 < 0.0 || config.ambient < 0.0) {
        throw ConfigError("rho0 and ambient must be nonnegative");
    }
    if (config.rho0 == 0.0 && config.ambient == 0.0) {
        throw ConfigError("initial field has no mass (rho0 = ambient = 0)");
    }
    if (config.diffusivity < 0.0) {
        throw ConfigError(detail::strf(
            "D must be nonnegative; got %.17g", config.diffusivity));
    }
    if (config.backend == Backend::shots && config.shots == 0) {
        throw ConfigError("backend=shots requires shots >= 1");
    }

    const bool quantum_or_classical = config.mode != Mode::analytic;
    if (quantum_or_classical) {
        const Collision family = active_family(config);
        if (family == Collision::linear) {
            if (std::abs(config.u) > lattice::VelocitySetD1Q3::cs_sq) {
                throw ConfigError(detail::strf(
                    "u = %.17g is outside the linear family's admissible "
                    "window |u| <= cs^2 = 1/3 (the mover-splitting angle's "
                    "arccos argument would leave [0, 1])",
                    config.u));
            }
            if (config.update_velocity) {
                throw ConfigError(
                    "update_velocity requires a nonlinear mode; the linear "
                    "family advects with a fixed velocity");
            }
        } else {
            if (std::abs(config.u) > 0.5) {
                throw ConfigError(detail::strf(
                    "u = %.17g is outside the nonlinear family's admissible "
                    "window |u| <= 1/2 (an arccos argument u +- 1/2 would "
                    "leave [-1, 1])",
                    config.u));
            }
        }
    }

    if (!config.x0.has_value()) {
        config.x0 = static_cast<double>(config_cells(config)) / 2.0;
    }
}

ExperimentConfig parse_config(const KeyValues &pairs) {
    ExperimentConfig config;
    for (const auto &[key, value] : pairs) {
        set_key(config, key, value);
    }
    validate_config(config);
    return config;
}

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::quantum_linear: return "quantum_linear";
        case Mode::quantum_nonlinear: return "quantum_nonlinear";
        case Mode::classical_linear: return "classical_linear";
        case Mode::classical_nonlinear: return "classical_nonlinear";
        case Mode::analytic: return "analytic";
        case Mode::compare: return "compare";
    }
    return "unknown";
}

std::string to_string(Collision collision) {
    return collision == Collision::linear ? "linear" : "nonlinear";
}

std::string to_string(Backend backend) {
    return backend == Backend::exact ? "exact" : "shots";
}

std::size_t config_cells(const ExperimentConfig &config) {
    return std::size_t{1} << config.pos_qubits;
}

std::string emit_config(const ExperimentConfig &config) {
    ExperimentConfig resolved = config;
    validate_config(resolved);
    std::string out;
    const auto kv = [&out](const char *key, const std::string &value) {
        out += key;
        out += '=';
        out += value;
        out += '\n';
    };
    const auto num = [](double v) { return detail::strf("%.17g", v); };

    kv("mode", to_string(resolved.mode));
    kv("collision", to_string(resolved.collision));
    kv("M", detail::strf("%u", resolved.pos_qubits));
    kv("steps", detail::strf("%u", resolved.steps));
    kv("u", num(resolved.u));
    kv("shots", detail::strf("%llu",
                             static_cast<unsigned long long>(resolved.shots)));
    kv("seed", detail::strf("%llu",
                            static_cast<unsigned long long>(resolved.seed)));
    kv("backend", to_string(resolved.backend));
    kv("update_velocity", resolved.update_velocity ? "true" : "false");
    kv("rho0", num(resolved.rho0));
    kv("ambient", num(resolved.ambient));
    kv("x0", num(*resolved.x0));
    kv("sigma0", num(resolved.sigma0));
    kv("D", num(resolved.diffusivity));
    kv("out", resolved.out);
    kv("plot", resolved.plot ? "true" : "false");
    return out;
}

} // namespace qlbm::harness
