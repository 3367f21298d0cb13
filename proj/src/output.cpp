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

#include "qlbm/harness/output.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "qlbm/linear.hpp"
#include "qlbm/nonlinear.hpp"

namespace qlbm::harness {
namespace {

std::string num(double v) { return detail::strf("%.17g", v); }

/// Columns of a result in canonical order: label + field + optional stderr.
struct Column {
    const char *name;
    const lattice::DensityField *field;
};

std::vector<Column> density_columns(const ExperimentResult &result) {
    std::vector<Column> cols;
    if (result.rho_quantum) {
        cols.push_back({"rho_quantum", &*result.rho_quantum});
    }
    if (result.rho_classical) {
        cols.push_back({"rho_classical", &*result.rho_classical});
    }
    if (result.rho_analytic) {
        cols.push_back({"rho_analytic", &*result.rho_analytic});
    }
    return cols;
}

void metric_block(std::string &out, const char *name,
                  const ErrorReport &report) {
    out += detail::strf("# metric %s.l2 = %.17g\n", name, report.l2);
    out += detail::strf("# metric %s.linf = %.17g\n", name, report.linf);
    out += detail::strf("# metric %s.l2_relative = %.17g\n", name,
                        report.l2_relative);
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary); // binary keeps LF endings
    if (!out) {
        throw Error(detail::strf("cannot open '%s' for writing",
                                 path.c_str()));
    }
    out << content;
    out.flush();
    if (!out) {
        throw Error(detail::strf("failed writing '%s'", path.c_str()));
    }
}

} // namespace

std::string render_csv(const ExperimentResult &result) {
    const std::vector<Column> cols = density_columns(result);
    const bool with_stderr =
        result.rho_quantum && !result.quantum_std_error.empty();

    std::string out = "x";
    for (const Column &c : cols) {
        out += ',';
        out += c.name;
    }
    if (with_stderr) {
        out += ",stderr_quantum";
    }
    out += '\n';

    const std::size_t cells = config_cells(result.config);
    for (std::size_t k = 0; k < cells; ++k) {
        out += detail::strf("%zu", k);
        for (const Column &c : cols) {
            out += ',';
            out += num((*c.field)[k]);
        }
        if (with_stderr) {
            out += ',';
            out += num(result.quantum_std_error[k]);
        }
        out += '\n';
    }
    return out;
}

std::string render_metrics(const ExperimentResult &result) {
    std::string out;
    if (result.quantum_vs_classical) {
        metric_block(out, "quantum_vs_classical",
                     *result.quantum_vs_classical);
    }
    if (result.quantum_vs_analytic) {
        metric_block(out, "quantum_vs_analytic", *result.quantum_vs_analytic);
    }
    if (result.classical_vs_analytic) {
        metric_block(out, "classical_vs_analytic",
                     *result.classical_vs_analytic);
    }
    const std::vector<Column> cols = density_columns(result);
    for (const Column &c : cols) {
        out += detail::strf("# metric %s.total_mass = %.17g\n", c.name,
                            c.field->total_mass());
    }
    for (const std::string &stream : result.rng_streams) {
        out += "# rng stream ";
        out += stream;
        out += '\n';
    }
    return out;
}

std::string render_manifest(const ExperimentResult &result) {
    std::string out = "# run manifest (parses as a config file)\n";
    out += emit_config(result.config);
    out += render_metrics(result);
    return out;
}

std::string render_angle_table(double u) {
    std::string out = detail::strf("collision angles at u = %.17g\n", u);

    out += "linear family (admissible |u| <= 1/3):\n";
    try {
        const double t1 = linear::theta1(u);
        out += detail::strf("  theta0 = %.17g\n", linear::theta0());
        out += detail::strf("  theta1 = %.17g\n", t1);
    } catch (const AdmissibilityError &e) {
        out += detail::strf("  inadmissible: %s\n", e.what());
    }

    out += "nonlinear family (admissible |u| <= 1/2):\n";
    try {
        const double t1 = nonlinear::theta1(u);
        const double t3 = nonlinear::theta3(u);
        const double t4 = nonlinear::theta4(u);
        out += detail::strf("  theta0 = %.17g\n", nonlinear::theta0());
        out += detail::strf("  theta1 = %.17g\n", t1);
        out += detail::strf("  theta2 = %.17g\n", nonlinear::theta2());
        out += detail::strf("  theta3 = %.17g\n", t3);
        out += detail::strf("  theta4 = %.17g\n", t4);
    } catch (const AdmissibilityError &e) {
        out += detail::strf("  inadmissible: %s\n", e.what());
    }
    return out;
}

std::string render_sweep_csv(const std::string &param,
                             const std::vector<SweepRow> &rows) {
    std::string out = param + ",l2,linf,l2_relative\n";
    for (const SweepRow &row : rows) {
        out += detail::strf("%llu,%.17g,%.17g,%.17g\n",
                            static_cast<unsigned long long>(row.value),
                            row.l2, row.linf, row.l2_relative);
    }
    return out;
}

std::string render_plot_svg(const ExperimentResult &result) {
    const std::vector<Column> cols = density_columns(result);
    const std::size_t cells = config_cells(result.config);
    static constexpr const char *kColors[] = {"#1f77b4", "#d62728",
                                              "#2ca02c"};

    double lo = 0.0, hi = 1.0;
    bool first = true;
    for (const Column &c : cols) {
        for (std::size_t k = 0; k < cells; ++k) {
            const double v = (*c.field)[k];
            lo = first ? v : std::min(lo, v);
            hi = first ? v : std::max(hi, v);
            first = false;
        }
    }
    if (first) { // no columns: render an empty frame
        lo = 0.0;
        hi = 1.0;
    }
    if (hi <= lo) {
        hi = lo + 1.0;
    }
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;

    const double width = 640.0, height = 400.0;
    const double ml = 70.0, mr = 20.0, mt = 20.0, mb = 45.0;
    const double pw = width - ml - mr, ph = height - mt - mb;
    const auto sx = [&](double x) {
        return ml + pw * x / static_cast<double>(cells > 1 ? cells - 1 : 1);
    };
    const auto sy = [&](double y) {
        return mt + ph * (1.0 - (y - lo) / (hi - lo));
    };

    std::string svg = detail::strf(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%g\" "
        "height=\"%g\" viewBox=\"0 0 %g %g\">\n",
        width, height, width, height);
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += detail::strf(
        "<rect x=\"%g\" y=\"%g\" width=\"%g\" height=\"%g\" fill=\"none\" "
        "stroke=\"black\"/>\n",
        ml, mt, pw, ph);

    // Axis labels: min/mid/max ticks on both axes.
    for (int i = 0; i <= 2; ++i) {
        const double fy = lo + (hi - lo) * i / 2.0;
        svg += detail::strf(
            "<text x=\"%g\" y=\"%g\" font-size=\"11\" "
            "text-anchor=\"end\">%.6g</text>\n",
            ml - 6.0, sy(fy) + 4.0, fy);
        const double fx = static_cast<double>(cells - 1) * i / 2.0;
        svg += detail::strf(
            "<text x=\"%g\" y=\"%g\" font-size=\"11\" "
            "text-anchor=\"middle\">%.6g</text>\n",
            sx(fx), mt + ph + 16.0, fx);
    }
    svg += detail::strf(
        "<text x=\"%g\" y=\"%g\" font-size=\"12\" "
        "text-anchor=\"middle\">x (cell)</text>\n",
        ml + pw / 2.0, height - 8.0);
    svg += detail::strf(
        "<text x=\"14\" y=\"%g\" font-size=\"12\" text-anchor=\"middle\" "
        "transform=\"rotate(-90 14 %g)\">rho</text>\n",
        mt + ph / 2.0, mt + ph / 2.0);

    // Shot-noise band: +-3 sigma bars under the quantum curve.
    if (result.rho_quantum && !result.quantum_std_error.empty()) {
        for (std::size_t k = 0; k < cells; ++k) {
            const double v = (*result.rho_quantum)[k];
            const double s = result.quantum_std_error[k];
            svg += detail::strf(
                "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" "
                "stroke=\"#1f77b4\" stroke-opacity=\"0.35\"/>\n",
                sx(static_cast<double>(k)), sy(v - 3.0 * s),
                sx(static_cast<double>(k)), sy(v + 3.0 * s));
        }
    }

    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        std::string points;
        for (std::size_t k = 0; k < cells; ++k) {
            points += detail::strf("%g,%g ", sx(static_cast<double>(k)),
                                   sy((*cols[ci].field)[k]));
        }
        // Assembled by concatenation: the point list outgrows strf's buffer.
        svg += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"";
        svg += kColors[ci % 3];
        svg += "\" stroke-width=\"1.5\"/>\n";
        svg += detail::strf(
            "<text x=\"%g\" y=\"%g\" font-size=\"12\" fill=\"%s\">%s"
            "</text>\n",
            ml + 10.0, mt + 16.0 + 14.0 * static_cast<double>(ci),
            kColors[ci % 3], cols[ci].name);
    }
    svg += "</svg>\n";
    return svg;
}

OutputPaths emit_outputs(const ExperimentResult &result) {
    const std::string &dir = result.config.out;
    if (dir.empty()) {
        throw Error("emit_outputs needs a nonempty output directory");
    }
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw Error(detail::strf("cannot create output directory '%s': %s",
                                 dir.c_str(), ec.message().c_str()));
    }

    OutputPaths paths;
    const std::filesystem::path base(dir);
    paths.csv = (base / "result.csv").string();
    write_text_file(paths.csv, render_csv(result));
    paths.manifest = (base / "manifest.txt").string();
    write_text_file(paths.manifest, render_manifest(result));
    if (result.config.plot) {
        paths.plot = (base / "plot.svg").string();
        write_text_file(paths.plot, render_plot_svg(result));
    }
    return paths;
}

} // namespace qlbm::harness
