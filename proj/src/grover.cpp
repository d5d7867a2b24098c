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

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include "qsearch/analysis.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/state_prep.hpp"

namespace qsearch {

namespace {

constexpr std::uint64_t kDefaultSeed = 0;

void check_ascending(std::span<const std::uint64_t> indices, std::uint64_t bound,
                     const char* what) {
    if (indices.empty()) throw std::invalid_argument(std::string(what) + " set is empty");
    std::uint64_t prev = 0;
    bool first = true;
    for (std::uint64_t x : indices) {
        if (x >= bound) throw std::out_of_range(std::string(what) + " index out of range");
        if (!first && x <= prev)
            throw std::invalid_argument(std::string(what) + " indices must be strictly ascending");
        prev = x;
        first = false;
    }
}

// X on every qubit where `index` has a 0 bit, mapping |index> onto |1...1>.
void push_bit_conjugation(Circuit& c, std::uint64_t index) {
    for (int q = 0; q < c.n_qubits; ++q)
        if (((index >> q) & 1ULL) == 0) c.ops.push_back(make_x(q));
}

// Z on the top qubit, controlled on |1> by every other qubit. Together with
// the X conjugation this negates exactly one basis amplitude.
void push_all_ones_phase_flip(Circuit& c) {
    std::vector<Control> controls;
    controls.reserve(static_cast<std::size_t>(c.n_qubits) - 1);
    for (int q = 0; q < c.n_qubits - 1; ++q) controls.push_back({q, 1});
    c.ops.push_back(make_z(c.n_qubits - 1, std::move(controls)));
}

}  // namespace

void validate(const SearchSpec& spec) {
    if (spec.n_items < 2) throw std::invalid_argument("search space must hold at least 2 items");
    check_ascending(spec.marked, spec.n_items, "marked");
}

Circuit build_phase_oracle(int n_qubits, std::span<const std::uint64_t> indices) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw std::invalid_argument("qubit count out of supported range");
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    check_ascending(indices, dim, "flip");
    Circuit c;
    c.n_qubits = n_qubits;
    c.label = "phase flip on " + std::to_string(indices.size()) + " of " +
              std::to_string(dim) + " indices";
    for (std::uint64_t x : indices) {
        push_bit_conjugation(c, x);
        push_all_ones_phase_flip(c);
        push_bit_conjugation(c, x);
    }
    return c;
}

Circuit build_oracle(const SearchSpec& spec) {
    validate(spec);
    Circuit c = build_phase_oracle(qubits_for(spec.n_items), spec.marked);
    c.label = "oracle N=" + std::to_string(spec.n_items) + " M=" +
              std::to_string(spec.marked.size());
    return c;
}

Circuit build_zero_reflection(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw std::invalid_argument("qubit count out of supported range");
    Circuit c;
    c.n_qubits = n_qubits;
    c.label = "reflection about zero";
    push_bit_conjugation(c, 0);
    push_all_ones_phase_flip(c);
    push_bit_conjugation(c, 0);
    return c;
}

GroverOperator grover_operator(const Circuit& prep, const Circuit& oracle) {
    if (prep.n_qubits != oracle.n_qubits)
        throw std::invalid_argument("prep and oracle widths differ");
    Circuit iteration = compose(oracle, inverse(prep));
    iteration = compose(iteration, build_zero_reflection(prep.n_qubits));
    iteration = compose(iteration, prep);
    iteration.label = "grover iteration";
    return GroverOperator{std::move(iteration), true};
}

void apply_grover_operator(const GroverOperator& op, StateVector& state) {
    state = simulate(op.circuit, std::move(state));
    if (op.global_phase_minus) apply_global_phase_minus(state);
}

std::uint64_t optimal_iterations(std::uint64_t n_items, std::uint64_t n_marked) {
    return analysis::t_new(n_items, n_marked);
}

double theoretical_success(std::uint64_t n_items, std::uint64_t n_marked, std::uint64_t k) {
    if (n_items < 1 || n_marked < 1 || n_marked > n_items)
        throw std::invalid_argument("marked count must be in [1, N]");
    const double theta =
        std::asin(std::sqrt(static_cast<double>(n_marked) / static_cast<double>(n_items)));
    const double s = std::sin(static_cast<double>(2 * k + 1) * theta);
    return s * s;
}

SearchReport run_search(const SearchSpec& spec, std::optional<std::uint64_t> iterations,
                        std::optional<std::uint64_t> shots, std::optional<std::uint64_t> seed) {
    validate(spec);
    const std::uint64_t n_marked = spec.marked.size();
    const Circuit prep = build_uniform_prep(spec.n_items);
    const GroverOperator op = grover_operator(prep, build_oracle(spec));
    const std::uint64_t k = iterations ? *iterations : optimal_iterations(spec.n_items, n_marked);

    StateVector state = simulate(prep, init_zero_state(prep.n_qubits));
    for (std::uint64_t i = 0; i < k; ++i) apply_grover_operator(op, state);

    double success = 0.0;
    for (std::uint64_t x : spec.marked) success += std::norm(state.amp(x));

    SearchReport report;
    report.n_items = spec.n_items;
    report.n_qubits = prep.n_qubits;
    report.n_marked = n_marked;
    report.iterations_used = k;
    report.success_probability = success;
    report.theoretical_probability = theoretical_success(spec.n_items, n_marked, k);
    report.t_old = analysis::t_old(spec.n_items, n_marked);
    report.t_new = analysis::t_new(spec.n_items, n_marked);
    if (shots) {
        const std::uint64_t used_seed = seed.value_or(kDefaultSeed);
        report.histogram = sample(state, *shots, used_seed);
        report.seed = used_seed;
    }
    return report;
}

StateVector amplitude_amplify(const Circuit& prep, std::span<const std::uint64_t> good,
                              std::uint64_t k) {
    validate(prep);
    const Circuit oracle = build_phase_oracle(prep.n_qubits, good);
    const GroverOperator op = grover_operator(prep, oracle);

    StateVector state = simulate(prep, init_zero_state(prep.n_qubits));
    double p_good = 0.0;
    for (std::uint64_t x : good) p_good += std::norm(state.amp(x));
    if (p_good <= 0.0)
        throw std::domain_error("preparation has zero overlap with the good set");

    for (std::uint64_t i = 0; i < k; ++i) apply_grover_operator(op, state);
    return state;
}

}  // namespace qsearch
