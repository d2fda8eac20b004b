// Copyright 2026 The dsc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial vs OpenMP row kernels on random tableaus of growing size.

#include <benchmark/benchmark.h>

#include <random>

#include "dsc/kernels.h"

namespace {

using namespace dsc;

TableauData random_tableau(std::size_t n) {
    TableauData t(n);
    std::mt19937_64 rng(n);
    for (auto& w : t.xs) w = rng();
    for (auto& w : t.zs) w = rng();
    return t;
}

PauliString random_pauli(std::size_t n) {
    std::mt19937_64 rng(n + 1);
    PauliString p(n);
    for (std::size_t q = 0; q < n; ++q) p.set(q, "IXYZ"[rng() % 4]);
    return p;
}

template <bool Parallel>
void BM_cnot_layer(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    auto t = random_tableau(n);
    for (auto _ : state) {
        for (std::size_t q = 0; q + 1 < n; q += 2) {
            if constexpr (Parallel) kernels::parallel::cnot(t, q, q + 1);
            else kernels::serial::cnot(t, q, q + 1);
        }
        benchmark::DoNotOptimize(t.signs.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(n / 2));
}

template <bool Parallel>
void BM_measure_update(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    const auto start = random_tableau(n);
    auto p = random_pauli(n);
    std::vector<std::uint8_t> flags(start.rows());
    for (auto _ : state) {
        // Each update leaves only the pivot anticommuting, so start over from the same tableau.
        state.PauseTiming();
        auto t = start;
        state.ResumeTiming();
        if constexpr (Parallel) {
            kernels::parallel::anticommute_flags(t, p, flags);
            kernels::parallel::multiply_flagged(t, 0, flags);
        } else {
            kernels::serial::anticommute_flags(t, p, flags);
            kernels::serial::multiply_flagged(t, 0, flags);
        }
        benchmark::DoNotOptimize(t.xs.data());
    }
}

}  // namespace

BENCHMARK(BM_cnot_layer<false>)->Name("cnot_layer/serial")->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_cnot_layer<true>)->Name("cnot_layer/parallel")->RangeMultiplier(4)->Range(64, 4096)->UseRealTime();
BENCHMARK(BM_measure_update<false>)->Name("measure_update/serial")->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_measure_update<true>)->Name("measure_update/parallel")->RangeMultiplier(4)->Range(64, 4096)->UseRealTime();

BENCHMARK_MAIN();
