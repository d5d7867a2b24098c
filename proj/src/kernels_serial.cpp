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

// Reference kernels. Single-threaded, kept deliberately plain: the parallel
// backend must stay bitwise-equal to these, and the unit tests hold it there.

#include <numeric>
#include <vector>

#include "qsearch/kernels.hpp"

namespace qsearch::kernels::serial {

void apply_pairs(amp_t* amps, std::uint64_t n_amps, PairSelect sel, const Unitary2& u) {
    const std::uint64_t half = n_amps >> 1;
    const std::uint64_t lo_mask = sel.target_mask - 1;
    const std::uint64_t hi_mask = ~lo_mask;
    for (std::uint64_t r = 0; r < half; ++r) {
        // Spread r into an index with the target bit cleared.
        const std::uint64_t i0 = ((r & hi_mask) << 1) | (r & lo_mask);
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
    for (std::uint64_t i = 0; i < n_amps; ++i) amps[i] = -amps[i];
}

void negate_indices(amp_t* amps, std::span<const std::uint64_t> indices) {
    for (std::uint64_t i : indices) amps[i] = -amps[i];
}

void probabilities(const amp_t* amps, std::uint64_t n_amps, double* out) {
    for (std::uint64_t i = 0; i < n_amps; ++i) out[i] = std::norm(amps[i]);
}

double norm_sq(const amp_t* amps, std::uint64_t n_amps) {
    const std::uint64_t n_blocks = (n_amps + kReduceBlock - 1) / kReduceBlock;
    std::vector<double> partial(n_blocks, 0.0);
    for (std::uint64_t b = 0; b < n_blocks; ++b) {
        const std::uint64_t end = std::min(n_amps, (b + 1) * kReduceBlock);
        double acc = 0.0;
        for (std::uint64_t i = b * kReduceBlock; i < end; ++i) acc += std::norm(amps[i]);
        partial[b] = acc;
    }
    return std::accumulate(partial.begin(), partial.end(), 0.0);
}

amp_t inner_product(const amp_t* a, const amp_t* b, std::uint64_t n_amps) {
    const std::uint64_t n_blocks = (n_amps + kReduceBlock - 1) / kReduceBlock;
    std::vector<amp_t> partial(n_blocks, amp_t{0.0, 0.0});
    for (std::uint64_t blk = 0; blk < n_blocks; ++blk) {
        const std::uint64_t end = std::min(n_amps, (blk + 1) * kReduceBlock);
        amp_t acc{0.0, 0.0};
        for (std::uint64_t i = blk * kReduceBlock; i < end; ++i) acc += std::conj(a[i]) * b[i];
        partial[blk] = acc;
    }
    return std::accumulate(partial.begin(), partial.end(), amp_t{0.0, 0.0});
}

}  // namespace qsearch::kernels::serial
