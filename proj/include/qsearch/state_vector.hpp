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
#include <map>
#include <span>
#include <vector>

#include "qsearch/gates.hpp"

namespace qsearch {

/// Largest supported register. 2^24 amplitudes = 256 MiB of state.
inline constexpr int kMaxQubits = 24;

/// Dense state vector over n qubits. Qubit q is bit q of the basis index,
/// so qubit 0 is the least significant bit. Unit norm is an invariant of
/// every public operation.
class StateVector {
  public:
    /// |0...0> on n qubits.
    explicit StateVector(int n_qubits);

    /// Wraps an explicit amplitude vector (length must be 2^n_qubits,
    /// norm must already be 1 within 1e-9).
    static StateVector from_amplitudes(int n_qubits, std::vector<amp_t> amps);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return static_cast<std::uint64_t>(amps_.size()); }
    std::span<const amp_t> amps() const { return amps_; }
    amp_t amp(std::uint64_t index) const { return amps_[index]; }

    amp_t* data() { return amps_.data(); }
    const amp_t* data() const { return amps_.data(); }

  private:
    StateVector() = default;

    int n_qubits_ = 0;
    std::vector<amp_t> amps_;
};

using Histogram = std::map<std::uint64_t, std::uint64_t>;

StateVector init_zero_state(int n_qubits);

/// Applies u to `target`, conditioned on every control matching its polarity.
/// An empty control list applies the gate unconditionally.
void apply_gate(StateVector& state, std::span<const Control> controls, int target,
                const Unitary2& u);

/// amps[i] <- -amps[i] for each listed basis index.
void phase_flip_indices(StateVector& state, std::span<const std::uint64_t> indices);

/// Negates every amplitude.
void apply_global_phase_minus(StateVector& state);

std::vector<double> probabilities(const StateVector& state);

/// Inverse-CDF sampling with a seeded mt19937_64; identical
/// (state, shots, seed) gives an identical histogram.
Histogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

amp_t inner_product(const StateVector& a, const StateVector& b);

double norm_sq(const StateVector& state);

}  // namespace qsearch
