// Copyright 2026 The qsearch developers

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Microbenchmarks pitting the serial kernels against the OpenMP backend on
// identical inputs, plus one whole-pipeline search benchmark. The state-size
// argument is the qubit count, so each step doubles the amplitude array.
//
//   ./bench_kernels --benchmark_filter=apply
//
// On a single-core host the parallel numbers should track serial within
// scheduling overhead; the interesting comparison needs several cores.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "qsearch/gates.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/kernels.hpp"

using namespace qsearch;

namespace {

std::vector<amp_t> make_state(int n_qubits, std::uint64_t salt = 0) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(n_qubits) * 977 + 1 + salt);
    std::normal_distribution<double> gauss;
    std::vector<amp_t> amps(std::uint64_t{1} << n_qubits);
    double total = 0.0;
    for (amp_t& a : amps) {
        a = {gauss(rng), gauss(rng)};
        total += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(total);
    for (amp_t& a : amps) a *= scale;
    return amps;
}

// Hadamard on a middle qubit: touches every amplitude, no control masking.
kernels::PairSelect plain_select(int n_qubits) {
    return {std::uint64_t{1} << (n_qubits / 2), 0, 0};
}

// Doubly-controlled rotation: one positive and one negative control, so the
// kernel skips three quarters of the pairs and the masking path dominates.
kernels::PairSelect controlled_select(int n_qubits) {
    return {std::uint64_t{1} << (n_qubits / 2), std::uint64_t{1} << 0,
            std::uint64_t{1} << (n_qubits - 1)};
}

void set_throughput(benchmark::State& state, int n_qubits) {
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(std::uint64_t{1} << n_qubits));
}

template <auto ApplyPairs>
void bench_apply_plain(benchmark::State& state) {
    const int n_qubits = static_cast<int>(state.range(0));
    std::vector<amp_t> amps = make_state(n_qubits);
    const Unitary2 h = hadamard_matrix();
    const kernels::PairSelect sel = plain_select(n_qubits);
    for (auto _ : state) {
        ApplyPairs(amps.data(), amps.size(), sel, h);
        benchmark::DoNotOptimize(amps.data());
        benchmark::ClobberMemory();
    }
    set_throughput(state, n_qubits);
}

template <auto ApplyPairs>
void bench_apply_controlled(benchmark::State& state) {
    const int n_qubits = static_cast<int>(state.range(0));
    std::vector<amp_t> amps = make_state(n_qubits);
    const Unitary2 ry = ry_matrix(0.31);
    const kernels::PairSelect sel = controlled_select(n_qubits);
    for (auto _ : state) {
        ApplyPairs(amps.data(), amps.size(), sel, ry);
        benchmark::DoNotOptimize(amps.data());
        benchmark::ClobberMemory();
    }
    set_throughput(state, n_qubits);
}

template <auto NormSq>
void bench_norm_sq(benchmark::State& state) {
    const int n_qubits = static_cast<int>(state.range(0));
    const std::vector<amp_t> amps = make_state(n_qubits);
    for (auto _ : state) {
        double result = NormSq(amps.data(), amps.size());
        benchmark::DoNotOptimize(result);
    }
    set_throughput(state, n_qubits);
}

template <auto Probabilities>
void bench_probabilities(benchmark::State& state) {
    const int n_qubits = static_cast<int>(state.range(0));
    const std::vector<amp_t> amps = make_state(n_qubits);
    std::vector<double> out(amps.size());
    for (auto _ : state) {
        Probabilities(amps.data(), amps.size(), out.data());
        benchmark::DoNotOptimize(out.data());
        benchmark::ClobberMemory();
    }
    set_throughput(state, n_qubits);
}

template <auto InnerProduct>
void bench_inner_product(benchmark::State& state) {
    const int n_qubits = static_cast<int>(state.range(0));
    const std::vector<amp_t> a = make_state(n_qubits);
    const std::vector<amp_t> b = make_state(n_qubits, /*salt=*/1);
    for (auto _ : state) {
        amp_t result = InnerProduct(a.data(), b.data(), a.size());
        benchmark::DoNotOptimize(result);
    }
    set_throughput(state, n_qubits);
}

template <auto NegateAll>
void bench_negate_all(benchmark::State& state) {
    const int n_qubits = static_cast<int>(state.range(0));
    std::vector<amp_t> amps = make_state(n_qubits);
    for (auto _ : state) {
        NegateAll(amps.data(), amps.size());
        benchmark::DoNotOptimize(amps.data());
        benchmark::ClobberMemory();
    }
    set_throughput(state, n_qubits);
}

// Whole pipeline through the dispatch layer: one optimal-length search over
// the largest non-power-of-two below the state size.
void bench_search(benchmark::State& state) {
    const int n_qubits = static_cast<int>(state.range(0));
    const std::uint64_t n_items = (std::uint64_t{1} << n_qubits) - 3;
    const SearchSpec spec{n_items, {n_items / 2}};
    for (auto _ : state) {
        const SearchReport r = run_search(spec, std::nullopt, std::nullopt, std::nullopt);
        benchmark::DoNotOptimize(r.success_probability);
    }
}

#define QSEARCH_BENCH_PAIR(fn, op)                                            \
    BENCHMARK(fn<kernels::serial::op>)                                        \
        ->Name("serial/" #op)->DenseRange(14, 22, 2)->Unit(benchmark::kMicrosecond); \
    BENCHMARK(fn<kernels::parallel::op>)                                      \
        ->Name("parallel/" #op)->DenseRange(14, 22, 2)->Unit(benchmark::kMicrosecond)

}  // namespace

QSEARCH_BENCH_PAIR(bench_apply_plain, apply_pairs);
BENCHMARK(bench_apply_controlled<kernels::serial::apply_pairs>)
    ->Name("serial/apply_pairs_controlled")->DenseRange(14, 22, 2)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(bench_apply_controlled<kernels::parallel::apply_pairs>)
    ->Name("parallel/apply_pairs_controlled")->DenseRange(14, 22, 2)
    ->Unit(benchmark::kMicrosecond);
QSEARCH_BENCH_PAIR(bench_norm_sq, norm_sq);
QSEARCH_BENCH_PAIR(bench_probabilities, probabilities);
QSEARCH_BENCH_PAIR(bench_inner_product, inner_product);
QSEARCH_BENCH_PAIR(bench_negate_all, negate_all);
BENCHMARK(bench_search)->Name("pipeline/run_search")->DenseRange(10, 18, 4)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
