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

/// \file output.hpp
/// Rendering of experiment artifacts: CSV (UTF-8, LF, full double precision
/// via %.17g), the run manifest (a config file with metric comments), an
/// optional self-contained SVG line plot, and the angle table.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlbm/harness/experiment.hpp"

namespace qlbm::harness {

/// Files written by emit_outputs (empty string = not written).
struct OutputPaths {
    std::string csv;
    std::string manifest;
    std::string plot;
};

/// Density table with header "x,rho_quantum,rho_classical,rho_analytic";
/// only the columns present in the result appear, in that order. With
/// shot-backend results an additional "stderr_quantum" column is appended.
std::string render_csv(const ExperimentResult &result);

/// The resolved config in canonical key=value form, followed by '#' comment
/// lines carrying the error metrics and RNG substream names. Parses back to
/// the identical config.
std::string render_manifest(const ExperimentResult &result);

/// Just the '#'-prefixed metric/stream comment lines of the manifest (also
/// appended to stdout output so plain runs report their norms).
std::string render_metrics(const ExperimentResult &result);

/// Minimal SVG line plot of the density columns.
std::string render_plot_svg(const ExperimentResult &result);

/// Collision angle tables (both families) for velocity u, one per line;
/// inadmissible families are annotated instead of throwing.
std::string render_angle_table(double u);

/// Rows of a sweep as CSV: "value,l2,linf,l2_relative".
std::string render_sweep_csv(const std::string &param,
                             const std::vector<SweepRow> &rows);

/// Writes result.csv, manifest.txt, and (if config.plot) plot.svg into
/// config.out, creating the directory if needed. Unwritable paths throw
/// qlbm::Error.
OutputPaths emit_outputs(const ExperimentResult &result);

} // namespace qlbm::harness
