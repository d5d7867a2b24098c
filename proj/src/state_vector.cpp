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

#include <algorithm>
#include <cassert>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "qsearch/kernels.hpp"
#include "qsearch/state_vector.hpp"

namespace qsearch {

namespace {

void check_qubit_count(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw std::invalid_argument("qubit count must be in [1, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(n_qubits));
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    check_qubit_count(n_qubits);
    amps_.assign(std::uint64_t{1} << n_qubits, amp_t{0.0, 0.0});
    amps_[0] = amp_t{1.0, 0.0};
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<amp_t> amps) {
    check_qubit_count(n_qubits);
    if (amps.size() != (std::uint64_t{1} << n_qubits))
        throw std::invalid_argument("amplitude vector length must be 2^n_qubits");
    const double nsq = kernels::norm_sq(amps.data(), amps.size());
    if (std::abs(nsq - 1.0) > 1e-9)
        throw std::invalid_argument("amplitude vector is not normalized");
    StateVector s;
    s.n_qubits_ = n_qubits;
    s.amps_ = std::move(amps);
    return s;
}

StateVector init_zero_state(int n_qubits) { return StateVector(n_qubits); }

void apply_gate(StateVector& state, std::span<const Control> controls, int target,
                const Unitary2& u) {
    const int n = state.n_qubits();
    if (target < 0 || target >= n) throw std::out_of_range("gate target out of range");
    std::uint64_t seen = std::uint64_t{1} << target;
    kernels::PairSelect sel{std::uint64_t{1} << target, 0, 0};
    for (const Control& c : controls) {
        if (c.qubit < 0 || c.qubit >= n) throw std::out_of_range("control qubit out of range");
        const std::uint64_t bit = std::uint64_t{1} << c.qubit;
        if (seen & bit) throw std::invalid_argument("duplicate qubit in gate operands");
        seen |= bit;
        if (c.polarity)
            sel.ctrl_one_mask |= bit;
        else
            sel.ctrl_zero_mask |= bit;
    }
    assert(is_unitary(u, 1e-12));
    kernels::apply_pairs(state.data(), state.dim(), sel, u);
}

void phase_flip_indices(StateVector& state, std::span<const std::uint64_t> indices) {
    for (std::uint64_t i : indices)
        if (i >= state.dim()) throw std::out_of_range("phase flip index out of range");
    kernels::serial::negate_indices(state.data(), indices);
}

void apply_global_phase_minus(StateVector& state) {
    kernels::negate_all(state.data(), state.dim());
}

std::vector<double> probabilities(const StateVector& state) {
    std::vector<double> out(state.dim());
    kernels::probabilities(state.data(), state.dim(), out.data());
    return out;
}

Histogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("shots must be >= 1");
    std::vector<double> cdf = probabilities(state);
    for (std::uint64_t i = 1; i < cdf.size(); ++i) cdf[i] += cdf[i - 1];

    // mt19937_64 with the high 53 bits mapped to [0, 1); pinned here rather
    // than via a distribution so histograms are reproducible across builds.
    std::mt19937_64 rng(seed);
    Histogram hist;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::uint64_t idx = static_cast<std::uint64_t>(it - cdf.begin());
        if (idx >= cdf.size()) idx = cdf.size() - 1;
        ++hist[idx];
    }
    return hist;
}

amp_t inner_product(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() != b.n_qubits())
        throw std::invalid_argument("inner product requires equal qubit counts");
    return kernels::inner_product(a.data(), b.data(), a.dim());
}

double norm_sq(const StateVector& state) {
    return kernels::norm_sq(state.data(), state.dim());
}

}  // namespace qsearch
