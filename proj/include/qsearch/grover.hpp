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
#include <optional>
#include <span>
#include <vector>

#include "qsearch/circuit.hpp"
#include "qsearch/state_vector.hpp"

namespace qsearch {

/// A search instance: N items, nonempty set of marked indices below N.
struct SearchSpec {
    std::uint64_t n_items;
    std::vector<std::uint64_t> marked;
};

/// Throws std::invalid_argument unless the spec is well formed
/// (N >= 2, marked nonempty, sorted, unique, all below N).
void validate(const SearchSpec& spec);

struct SearchReport {
    std::uint64_t n_items;
    int n_qubits;
    std::uint64_t n_marked;
    std::uint64_t iterations_used;
    double success_probability;
    double theoretical_probability;
    std::uint64_t t_old;
    std::uint64_t t_new;
    std::optional<Histogram> histogram;
    std::optional<std::uint64_t> seed;
};

/// Phase-flip circuit over the given basis indices: per index, X-conjugation
/// onto the all-ones pattern around a Z on the top qubit controlled by all
/// others. For a 1-qubit register this degenerates to Z or X-Z-X.
Circuit build_phase_oracle(int n_qubits, std::span<const std::uint64_t> indices);

/// The oracle for a search instance, on ceil(log2 N) qubits.
Circuit build_oracle(const SearchSpec& spec);

/// Negates the amplitude of |0...0> only: X on all qubits, a fully
/// controlled Z, X on all qubits.
Circuit build_zero_reflection(int n_qubits);

/// One amplification iteration assembled from blocks:
/// oracle, then inverse(prep), then the zero reflection, then prep.
/// The iteration as written in gates differs from the exact rotation
/// operator by a global -1; `global_phase_minus` tells the simulation layer
/// to apply that sign after each iteration so state-level identities hold
/// exactly, not merely up to phase.
struct GroverOperator {
    Circuit circuit;
    bool global_phase_minus;
};

GroverOperator grover_operator(const Circuit& prep, const Circuit& oracle);

/// One application of the operator (including the global sign when flagged).
void apply_grover_operator(const GroverOperator& op, StateVector& state);

/// floor((pi/4) * sqrt(N/M)). May be 0 when M/N is large.
std::uint64_t optimal_iterations(std::uint64_t n_items, std::uint64_t n_marked);

/// sin^2((2k+1) * asin(sqrt(M/N))).
double theoretical_success(std::uint64_t n_items, std::uint64_t n_marked, std::uint64_t k);

/// Runs the search: uniform prep over N, k iterations (default
/// optimal_iterations), success probability summed over the marked set.
/// With `shots`, attaches a seeded measurement histogram.
SearchReport run_search(const SearchSpec& spec,
                        std::optional<std::uint64_t> iterations = std::nullopt,
                        std::optional<std::uint64_t> shots = std::nullopt,
                        std::optional<std::uint64_t> seed = std::nullopt);

/// Generic amplitude amplification with an arbitrary preparation circuit:
/// applies k iterations built from `prep` and a phase oracle over `good`,
/// starting from prep|0...0>. Throws std::domain_error when prep|0...0> has
/// no overlap with the good set.
StateVector amplitude_amplify(const Circuit& prep, std::span<const std::uint64_t> good,
                              std::uint64_t k);

}  // namespace qsearch
