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

/// Compares the OpenMP statevector kernels against their serial reference
/// twins across statevector sizes. The argument is the number of position
/// qubits; with the two f-register qubits used here the statevector holds
/// 2^(arg + 2) amplitudes.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "qlbm/gates.hpp"
#include "qlbm/measure.hpp"
#include "qlbm/rng.hpp"
#include "qlbm/statevector.hpp"

namespace {

using qlbm::core::ControlBit;
using qlbm::core::GateSpec;
using qlbm::core::QubitLayout;
using qlbm::core::RngStream;
using qlbm::core::SeedKey;
using qlbm::core::ShiftDirection;
using qlbm::core::StateVector;

StateVector make_state(unsigned pos_qubits) {
    const QubitLayout layout(2, pos_qubits);
    StateVector state = StateVector::zeros(layout);
    RngStream rng(SeedKey{7}.with("bench").with(pos_qubits));
    for (auto &amp : state.amplitudes()) {
        amp = {2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
    }
    const double inv = 1.0 / std::sqrt(state.norm_sq());
    for (auto &amp : state.amplitudes()) {
        amp *= inv;
    }
    return state;
}

GateSpec controlled_ry(const StateVector &state) {
    const unsigned fq0 = state.layout().f_qubit(0);
    const unsigned fq1 = state.layout().f_qubit(1);
    return GateSpec::ry(0.7, fq1, {{fq0, true}});
}

std::vector<double> per_cell_angles(const StateVector &state) {
    std::vector<double> thetas(state.layout().cells());
    for (std::size_t k = 0; k < thetas.size(); ++k) {
        thetas[k] = 0.3 + 0.001 * static_cast<double>(k % 64);
    }
    return thetas;
}

void bm_gate_omp(benchmark::State &bench) {
    StateVector state = make_state(static_cast<unsigned>(bench.range(0)));
    const GateSpec gate = controlled_ry(state);
    for (auto _ : bench) {
        qlbm::core::apply_gate(state, gate);
        benchmark::DoNotOptimize(state.amplitudes().data());
    }
    bench.SetItemsProcessed(static_cast<std::int64_t>(bench.iterations()) *
                            static_cast<std::int64_t>(state.dim()));
}

void bm_gate_ref(benchmark::State &bench) {
    StateVector state = make_state(static_cast<unsigned>(bench.range(0)));
    const GateSpec gate = controlled_ry(state);
    for (auto _ : bench) {
        qlbm::core::ref::apply_gate(state, gate);
        benchmark::DoNotOptimize(state.amplitudes().data());
    }
    bench.SetItemsProcessed(static_cast<std::int64_t>(bench.iterations()) *
                            static_cast<std::int64_t>(state.dim()));
}

void bm_shift_omp(benchmark::State &bench) {
    StateVector state = make_state(static_cast<unsigned>(bench.range(0)));
    const unsigned fq0 = state.layout().f_qubit(0);
    const std::vector<ControlBit> controls = {{fq0, true}};
    for (auto _ : bench) {
        qlbm::core::apply_cyclic_shift(state, ShiftDirection::positive,
                                       controls);
        benchmark::DoNotOptimize(state.amplitudes().data());
    }
    bench.SetItemsProcessed(static_cast<std::int64_t>(bench.iterations()) *
                            static_cast<std::int64_t>(state.dim()));
}

void bm_shift_ref(benchmark::State &bench) {
    StateVector state = make_state(static_cast<unsigned>(bench.range(0)));
    const unsigned fq0 = state.layout().f_qubit(0);
    const std::vector<ControlBit> controls = {{fq0, true}};
    for (auto _ : bench) {
        qlbm::core::ref::apply_cyclic_shift(state, ShiftDirection::positive,
                                            controls);
        benchmark::DoNotOptimize(state.amplitudes().data());
    }
    bench.SetItemsProcessed(static_cast<std::int64_t>(bench.iterations()) *
                            static_cast<std::int64_t>(state.dim()));
}

void bm_keyed_ry_omp(benchmark::State &bench) {
    StateVector state = make_state(static_cast<unsigned>(bench.range(0)));
    const std::vector<double> thetas = per_cell_angles(state);
    const unsigned fq0 = state.layout().f_qubit(0);
    for (auto _ : bench) {
        qlbm::core::apply_position_keyed_ry(state, fq0, {}, thetas);
        benchmark::DoNotOptimize(state.amplitudes().data());
    }
    bench.SetItemsProcessed(static_cast<std::int64_t>(bench.iterations()) *
                            static_cast<std::int64_t>(state.dim()));
}

void bm_keyed_ry_ref(benchmark::State &bench) {
    StateVector state = make_state(static_cast<unsigned>(bench.range(0)));
    const std::vector<double> thetas = per_cell_angles(state);
    const unsigned fq0 = state.layout().f_qubit(0);
    for (auto _ : bench) {
        qlbm::core::ref::apply_position_keyed_ry(state, fq0, {}, thetas);
        benchmark::DoNotOptimize(state.amplitudes().data());
    }
    bench.SetItemsProcessed(static_cast<std::int64_t>(bench.iterations()) *
                            static_cast<std::int64_t>(state.dim()));
}

void bm_position_probabilities(benchmark::State &bench) {
    const StateVector state =
        make_state(static_cast<unsigned>(bench.range(0)));
    for (auto _ : bench) {
        benchmark::DoNotOptimize(
            qlbm::core::position_probabilities(state));
    }
    bench.SetItemsProcessed(static_cast<std::int64_t>(bench.iterations()) *
                            static_cast<std::int64_t>(state.dim()));
}

BENCHMARK(bm_gate_omp)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(bm_gate_ref)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(bm_shift_omp)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(bm_shift_ref)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(bm_keyed_ry_omp)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(bm_keyed_ry_ref)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(bm_position_probabilities)->Arg(12)->Arg(16)->Arg(20);

} // namespace

BENCHMARK_MAIN();
