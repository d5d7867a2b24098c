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

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qsearch/state_prep.hpp"

namespace qsearch {

int qubits_for(std::uint64_t n_items) {
    if (n_items < 2) throw std::invalid_argument("item count must be >= 2");
    return std::bit_width(n_items - 1);
}

BitDecomposition bit_positions(std::uint64_t n_items) {
    if (n_items < 2) throw std::invalid_argument("item count must be >= 2");
    BitDecomposition d{n_items, {}};
    for (int b = 0; b < 64; ++b)
        if (n_items & (std::uint64_t{1} << b)) d.positions.push_back(b);
    return d;
}

namespace {

// Angle whose RY splits amplitude weight `num/den` off a |1> control qubit.
// The operands are exact integers, so the ratio is formed before the root
// with no cancellation.
double split_angle(std::uint64_t num, std::uint64_t den) {
    return -2.0 * std::acos(std::sqrt(static_cast<double>(num) / static_cast<double>(den)));
}

}  // namespace

Circuit build_uniform_prep(std::uint64_t n_items) {
    const int n = qubits_for(n_items);
    const BitDecomposition dec = bit_positions(n_items);
    const std::vector<int>& l = dec.positions;
    const std::size_t k = l.size() - 1;

    Circuit c;
    c.n_qubits = n;
    c.label = "uniform superposition over N=" + std::to_string(n_items);

    if (k == 0) {
        // N = 2^n: plain Hadamards.
        for (int q = 0; q < n; ++q) c.ops.push_back(make_h(q));
        return c;
    }

    for (std::size_t j = 1; j <= k; ++j) c.ops.push_back(make_x(l[j]));
    for (int h = 0; h < l[0]; ++h) c.ops.push_back(make_h(h));

    std::uint64_t covered = std::uint64_t{1} << l[0];
    c.ops.push_back(make_ry(split_angle(covered, n_items), l[1]));
    for (int h = l[0]; h < l[1]; ++h)
        c.ops.push_back(make_h(h, {{l[1], 0}}));

    for (std::size_t m = 1; m < k; ++m) {
        const std::uint64_t step = std::uint64_t{1} << l[m];
        c.ops.push_back(make_ry(split_angle(step, n_items - covered), l[m + 1], {{l[m], 0}}));
        for (int h = l[m]; h < l[m + 1]; ++h)
            c.ops.push_back(make_h(h, {{l[m + 1], 0}}));
        covered += step;
    }
    return c;
}

StateVector prepare_uniform(std::uint64_t n_items) {
    const Circuit c = build_uniform_prep(n_items);
    return simulate(c, init_zero_state(c.n_qubits));
}

}  // namespace qsearch
