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

#include "qlbm/harness/cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qlbm/errors.hpp"
#include "qlbm/harness/config.hpp"
#include "qlbm/harness/experiment.hpp"
#include "qlbm/harness/output.hpp"

namespace qlbm::harness {
namespace {

/// Flags shared by the run/compare/sweep subcommands. Values are collected
/// as raw key=value pairs and routed through the same parser as config
/// files; pairs gathered here are appended after the file's, so flags win.
struct CommonOpts {
    std::string config_file;
    KeyValues flags;

    void attach(CLI::App *sub, bool with_mode) {
        sub->add_option("--config", config_file,
                        "config file (key=value lines)");
        if (with_mode) {
            kv(sub, "--mode", "mode",
               "quantum_linear|quantum_nonlinear|classical_linear|"
               "classical_nonlinear|analytic|compare");
        }
        kv(sub, "--collision", "collision",
           "collision family: linear|nonlinear");
        kv(sub, "--M", "M", "position qubits (2^M lattice cells)");
        kv(sub, "--steps", "steps", "number of timesteps");
        kv(sub, "--u", "u", "advection velocity");
        kv(sub, "--shots", "shots", "shots per measured distribution");
        kv(sub, "--seed", "seed", "root RNG seed");
        kv(sub, "--backend", "backend", "probability source: exact|shots");
        kv(sub, "--rho0", "rho0", "Gaussian hill amplitude");
        kv(sub, "--ambient", "ambient", "ambient background density");
        kv(sub, "--x0", "x0", "hill center (default: domain center)");
        kv(sub, "--sigma0", "sigma0", "initial hill width");
        kv(sub, "--D", "D", "diffusivity of the analytic reference");
        kv(sub, "--out", "out", "output directory (default: stdout)");
        flag(sub, "--update-velocity", "update_velocity",
             "recompute u from the momentum moment each step");
        flag(sub, "--plot", "plot", "also write plot.svg");
    }

  private:
    void kv(CLI::App *sub, const std::string &name, std::string key,
            const std::string &desc) {
        sub->add_option_function<std::string>(
               name,
               [this, key](const std::string &value) {
                   flags.emplace_back(key, value);
               },
               desc)
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    }

    void flag(CLI::App *sub, const std::string &name, std::string key,
              const std::string &desc) {
        sub->add_flag_function(
            name,
            [this, key](std::int64_t count) {
                if (count > 0) {
                    flags.emplace_back(key, "true");
                }
            },
            desc);
    }
};

ExperimentConfig build_config(const CommonOpts &opts,
                              const char *forced_mode) {
    KeyValues pairs;
    if (!opts.config_file.empty()) {
        pairs = read_config_file(opts.config_file);
    }
    if (forced_mode != nullptr) {
        pairs.emplace_back("mode", forced_mode);
    }
    pairs.insert(pairs.end(), opts.flags.begin(), opts.flags.end());
    return parse_config(pairs);
}

void execute_experiment(const ExperimentConfig &config) {
    const ExperimentResult result = run_experiment(config);
    if (config.out.empty()) {
        std::cout << render_csv(result) << render_metrics(result);
    } else {
        const OutputPaths paths = emit_outputs(result);
        std::cout << "wrote " << paths.csv << '\n';
        std::cout << "wrote " << paths.manifest << '\n';
        if (!paths.plot.empty()) {
            std::cout << "wrote " << paths.plot << '\n';
        }
        std::cout << render_metrics(result);
    }
}

std::vector<std::uint64_t> parse_value_list(const std::string &text) {
    std::vector<std::uint64_t> values;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find(',', begin);
        if (end == std::string::npos) {
            end = text.size();
        }
        const std::string item = text.substr(begin, end - begin);
        if (item.empty()) {
            throw ConfigError("--values needs comma-separated nonnegative "
                              "integers");
        }
        char *stop = nullptr;
        const unsigned long long v = std::strtoull(item.c_str(), &stop, 10);
        if (stop != item.c_str() + item.size() || item[0] == '-') {
            throw ConfigError(detail::strf(
                "--values entry '%s' is not a nonnegative integer",
                item.c_str()));
        }
        values.push_back(v);
        begin = end + 1;
        if (end == text.size()) {
            break;
        }
    }
    return values;
}

int run_cli(const std::vector<std::string> &args) {
    CLI::App app{"quantum lattice-Boltzmann laboratory (D1Q3)"};
    app.require_subcommand(1);

    CLI::App *run = app.add_subcommand("run", "run one experiment");
    CommonOpts run_opts;
    run_opts.attach(run, /*with_mode=*/true);

    CLI::App *compare = app.add_subcommand(
        "compare", "run quantum vs classical vs analytic side by side");
    CommonOpts compare_opts;
    compare_opts.attach(compare, /*with_mode=*/false);

    CLI::App *sweep = app.add_subcommand(
        "sweep", "repeat a compare run over a list of shots or steps");
    CommonOpts sweep_opts;
    sweep_opts.attach(sweep, /*with_mode=*/false);
    std::string sweep_param;
    std::string sweep_values;
    sweep->add_option("--param", sweep_param, "swept parameter: shots|steps")
        ->required();
    sweep->add_option("--values", sweep_values,
                      "comma-separated parameter values")
        ->required();

    CLI::App *angles =
        app.add_subcommand("angles", "print the collision angle tables");
    double angles_u = 0.0;
    angles->add_option("--u", angles_u, "advection velocity")->required();

    std::vector<const char *> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qlbm");
    for (const std::string &arg : args) {
        argv.push_back(arg.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e); // prints help, returns 0
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2; // bad usage is a configuration error
    }

    if (app.got_subcommand(run)) {
        execute_experiment(build_config(run_opts, nullptr));
    } else if (app.got_subcommand(compare)) {
        execute_experiment(build_config(compare_opts, "compare"));
    } else if (app.got_subcommand(sweep)) {
        const ExperimentConfig base = build_config(sweep_opts, "compare");
        const std::vector<SweepRow> rows =
            run_sweep(base, sweep_param, parse_value_list(sweep_values));
        const std::string csv = render_sweep_csv(sweep_param, rows);
        if (base.out.empty()) {
            std::cout << csv;
        } else {
            std::error_code ec;
            std::filesystem::create_directories(base.out, ec);
            if (ec) {
                throw Error(detail::strf(
                    "cannot create output directory '%s': %s",
                    base.out.c_str(), ec.message().c_str()));
            }
            const std::string path =
                (std::filesystem::path(base.out) / "sweep.csv").string();
            std::ofstream out(path, std::ios::binary);
            if (!out) {
                throw Error(detail::strf("cannot open '%s' for writing",
                                         path.c_str()));
            }
            out << csv;
            std::cout << "wrote " << path << '\n';
        }
    } else if (app.got_subcommand(angles)) {
        std::cout << render_angle_table(angles_u);
    }
    return 0;
}

} // namespace

int cli_main(const std::vector<std::string> &args) {
    try {
        return run_cli(args);
    } catch (const ConfigError &e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const DegeneracyError &e) {
        std::cerr << "degeneracy error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace qlbm::harness
