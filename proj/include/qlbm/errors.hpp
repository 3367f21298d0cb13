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

/// \file errors.hpp
/// Exception hierarchy shared by every module. Each error type corresponds to
/// one class of precondition so callers (and the CLI exit-code mapping) can
/// react by catching the base or a specific kind.

#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace qlbm {

/// Base class of all exceptions thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Qubit indices, register sizes, or buffer lengths inconsistent with the
/// register layout of a state.
class LayoutError : public Error {
  public:
    using Error::Error;
};

/// Input values outside their physical domain (negative density, zero total
/// mass, probabilities that exceed one, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Advection velocity outside the range where a collision block's rotation
/// angles are defined (an arccos/arcsin argument would leave [-1, 1]).
class AdmissibilityError : public Error {
  public:
    using Error::Error;
};

/// Probability mass too small to renormalize after a measurement, or a moment
/// requested from a cell with no mass.
class DegeneracyError : public Error {
  public:
    using Error::Error;
};

/// A circuit block applied to a state whose registers are not in the
/// configuration the block requires (e.g. distribution register not reset).
class StateError : public Error {
  public:
    using Error::Error;
};

/// Invalid or inconsistent run configuration (unknown key, bad value, or a
/// cross-field violation discovered before any simulation starts).
class ConfigError : public Error {
  public:
    using Error::Error;
};

namespace detail {

/// printf-style message formatting for exception texts (GCC 11 has no
/// std::format). Messages are short; 512 bytes is plenty.
template <typename... Args>
std::string strf(const char *fmt, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return std::string(buf);
}

} // namespace detail
} // namespace qlbm
