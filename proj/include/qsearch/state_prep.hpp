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
#include <vector>

#include "qsearch/circuit.hpp"

namespace qsearch {

/// Number of qubits needed to index n_items basis states: ceil(log2(N)).
int qubits_for(std::uint64_t n_items);

/// The set-bit positions of N, ascending, with their sum of powers equal to N.
struct BitDecomposition {
    std::uint64_t n_items;
    std::vector<int> positions;
};

BitDecomposition bit_positions(std::uint64_t n_items);

/// Builds the uniform-superposition preparation circuit over
/// n = ceil(log2(N)) qubits, with no ancillas and at most 3n gates.
/// Simulating it on |0...0> yields amplitude 1/sqrt(N) on indices 0..N-1 and
/// zero elsewhere. For N = 2^n the circuit is exactly n Hadamards.
///
/// For N with set bits at l_0 < ... < l_k (k >= 1) the circuit is a cascade:
/// X on each q_{l_j} (j >= 1); H on q_0..q_{l_0 - 1}; an RY on q_{l_1} whose
/// angle splits off weight 2^{l_0}/N; then per bit-group a zero-controlled H
/// fan-out over the freshly split qubits and a zero-controlled RY carrying
/// the remaining weight up to the next set bit.
Circuit build_uniform_prep(std::uint64_t n_items);

/// simulate(build_uniform_prep(N), |0...0>). Requires ceil(log2 N) <= kMaxQubits.
StateVector prepare_uniform(std::uint64_t n_items);

}  // namespace qsearch
