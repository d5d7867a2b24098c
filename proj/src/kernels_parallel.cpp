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

// OpenMP backend. Gate application touches disjoint index pairs and the
// elementwise kernels write disjoint slots, so scheduling cannot change the
// result. Reductions reuse the fixed block layout from kernels.hpp; only the
// per-block partials run concurrently and the fold stays in index order,
// which keeps every value bitwise-equal to the serial backend.

#include <cstdint>
#include <numeric>
#include <vector>

#include "qsearch/kernels.hpp"

namespace qsearch::kernels {

bool parallel_available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

namespace parallel {

void apply_pairs(amp_t* amps, std::uint64_t n_amps, PairSelect sel, const Unitary2& u) {
    const std::int64_t half = static_cast<std::int64_t>(n_amps >> 1);
    const std::uint64_t lo_mask = sel.target_mask - 1;
    const std::uint64_t hi_mask = ~lo_mask;
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < half; ++r) {
        const std::uint64_t i0 =
            ((static_cast<std::uint64_t>(r) & hi_mask) << 1) | (static_cast<std::uint64_t>(r) & lo_mask);
        if ((i0 & sel.ctrl_one_mask) != sel.ctrl_one_mask) continue;
        if ((i0 & sel.ctrl_zero_mask) != 0) continue;
        const std::uint64_t i1 = i0 | sel.target_mask;
        const amp_t a0 = amps[i0];
        const amp_t a1 = amps[i1];
        amps[i0] = u.m00 * a0 + u.m01 * a1;
        amps[i1] = u.m10 * a0 + u.m11 * a1;
    }
}

void negate_all(amp_t* amps, std::uint64_t n_amps) {
    const std::int64_t n = static_cast<std::int64_t>(n_amps);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) amps[i] = -amps[i];
}

void probabilities(const amp_t* amps, std::uint64_t n_amps, double* out) {
    const std::int64_t n = static_cast<std::int64_t>(n_amps);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) out[i] = std::norm(amps[i]);
}

double norm_sq(const amp_t* amps, std::uint64_t n_amps) {
    const std::int64_t n_blocks =
        static_cast<std::int64_t>((n_amps + kReduceBlock - 1) / kReduceBlock);
    std::vector<double> partial(static_cast<std::size_t>(n_blocks), 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < n_blocks; ++b) {
        const std::uint64_t begin = static_cast<std::uint64_t>(b) * kReduceBlock;
        const std::uint64_t end = std::min(n_amps, begin + kReduceBlock);
        double acc = 0.0;
        for (std::uint64_t i = begin; i < end; ++i) acc += std::norm(amps[i]);
        partial[static_cast<std::size_t>(b)] = acc;
    }
    return std::accumulate(partial.begin(), partial.end(), 0.0);
}

amp_t inner_product(const amp_t* a, const amp_t* b, std::uint64_t n_amps) {
    const std::int64_t n_blocks =
        static_cast<std::int64_t>((n_amps + kReduceBlock - 1) / kReduceBlock);
    std::vector<amp_t> partial(static_cast<std::size_t>(n_blocks), amp_t{0.0, 0.0});
#pragma omp parallel for schedule(static)
    for (std::int64_t blk = 0; blk < n_blocks; ++blk) {
        const std::uint64_t begin = static_cast<std::uint64_t>(blk) * kReduceBlock;
        const std::uint64_t end = std::min(n_amps, begin + kReduceBlock);
        amp_t acc{0.0, 0.0};
        for (std::uint64_t i = begin; i < end; ++i) acc += std::conj(a[i]) * b[i];
        partial[static_cast<std::size_t>(blk)] = acc;
    }
    return std::accumulate(partial.begin(), partial.end(), amp_t{0.0, 0.0});
}

}  // namespace parallel

void apply_pairs(amp_t* amps, std::uint64_t n_amps, PairSelect sel, const Unitary2& u) {
    if (parallel_available() && n_amps >= kParallelCutoff)
        parallel::apply_pairs(amps, n_amps, sel, u);
    else
        serial::apply_pairs(amps, n_amps, sel, u);
}

void negate_all(amp_t* amps, std::uint64_t n_amps) {
    if (parallel_available() && n_amps >= kParallelCutoff)
        parallel::negate_all(amps, n_amps);
    else
        serial::negate_all(amps, n_amps);
}

void probabilities(const amp_t* amps, std::uint64_t n_amps, double* out) {
    if (parallel_available() && n_amps >= kParallelCutoff)
        parallel::probabilities(amps, n_amps, out);
    else
        serial::probabilities(amps, n_amps, out);
}

double norm_sq(const amp_t* amps, std::uint64_t n_amps) {
    if (parallel_available() && n_amps >= kParallelCutoff)
        return parallel::norm_sq(amps, n_amps);
    return serial::norm_sq(amps, n_amps);
}

amp_t inner_product(const amp_t* a, const amp_t* b, std::uint64_t n_amps) {
    if (parallel_available() && n_amps >= kParallelCutoff)
        return parallel::inner_product(a, b, n_amps);
    return serial::inner_product(a, b, n_amps);
}

}  // namespace qsearch::kernels
