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
#pragma once

#include <cstdint>
#include <span>

#include "qsearch/gates.hpp"

namespace qsearch::kernels {

/// Selects the amplitude pairs touched by a single-qubit gate application.
/// A pair is (i0, i0 | target_mask) with the target bit of i0 clear; it is
/// acted on iff every bit of ctrl_one_mask is set in i0 and no bit of
/// ctrl_zero_mask is.
struct PairSelect {
    std::uint64_t target_mask;
    std::uint64_t ctrl_one_mask;
    std::uint64_t ctrl_zero_mask;
};

// Reductions accumulate per fixed-size block and then fold the block sums in
// index order, so serial and parallel backends produce bitwise-equal results
// regardless of thread count.
inline constexpr std::uint64_t kReduceBlock = 1 << 12;

// Below this state size the parallel backend falls through to serial.
inline constexpr std::uint64_t kParallelCutoff = 1 << 14;

namespace serial {

void apply_pairs(amp_t* amps, std::uint64_t n_amps, PairSelect sel, const Unitary2& u);
void negate_all(amp_t* amps, std::uint64_t n_amps);
void negate_indices(amp_t* amps, std::span<const std::uint64_t> indices);
void probabilities(const amp_t* amps, std::uint64_t n_amps, double* out);
double norm_sq(const amp_t* amps, std::uint64_t n_amps);
amp_t inner_product(const amp_t* a, const amp_t* b, std::uint64_t n_amps);

}  // namespace serial

namespace parallel {

void apply_pairs(amp_t* amps, std::uint64_t n_amps, PairSelect sel, const Unitary2& u);
void negate_all(amp_t* amps, std::uint64_t n_amps);
void probabilities(const amp_t* amps, std::uint64_t n_amps, double* out);
double norm_sq(const amp_t* amps, std::uint64_t n_amps);
amp_t inner_product(const amp_t* a, const amp_t* b, std::uint64_t n_amps);

}  // namespace parallel

/// True when the library was built with OpenMP.
bool parallel_available();

// Dispatchers used by the StateVector layer: parallel backend above
// kParallelCutoff when available, serial otherwise. Both backends are
// bitwise-identical for a fixed input.
void apply_pairs(amp_t* amps, std::uint64_t n_amps, PairSelect sel, const Unitary2& u);
void negate_all(amp_t* amps, std::uint64_t n_amps);
void probabilities(const amp_t* amps, std::uint64_t n_amps, double* out);
double norm_sq(const amp_t* amps, std::uint64_t n_amps);
amp_t inner_product(const amp_t* a, const amp_t* b, std::uint64_t n_amps);

}  // namespace qsearch::kernels
