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

/// \file cli.hpp
/// Command-line front end (subcommands run / compare / sweep / angles).
/// Factored out of main() so tests can drive it in-process.
///
/// Exit codes: 0 success, 2 configuration errors, 3 degenerate probability
/// mass, 1 anything else.

#pragma once

#include <string>
#include <vector>

namespace qlbm::harness {

/// Runs the CLI on `args` (without the program name). Never throws; errors
/// are printed to stderr and mapped to the exit code.
int cli_main(const std::vector<std::string> &args);

} // namespace qlbm::harness
