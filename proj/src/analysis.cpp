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
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "qsearch/analysis.hpp"

namespace qsearch::analysis {

namespace {

void check_domain(std::uint64_t n_items, std::uint64_t n_marked) {
    if (n_items < 2) throw std::invalid_argument("item count must be >= 2");
    if (n_items > kMaxItems)
        throw std::invalid_argument("item count exceeds the 2^52 precision cap");
    if (n_marked < 1 || n_marked > n_items)
        throw std::invalid_argument("marked count must be in [1, N]");
}

int ceil_log2(std::uint64_t n_items) {
    return static_cast<int>(std::bit_width(n_items - 1));
}

// floor((pi/4) * sqrt(radicand / M)); radicand and M are exact integers and
// stay exactly representable below the 2^52 cap.
std::uint64_t iteration_floor(std::uint64_t radicand, std::uint64_t n_marked) {
    const double ratio = static_cast<double>(radicand) / static_cast<double>(n_marked);
    const double value = std::numbers::pi / 4.0 * std::sqrt(ratio);
    return static_cast<std::uint64_t>(std::floor(value));
}

std::string format_fixed6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

std::uint64_t t_old(std::uint64_t n_items, std::uint64_t n_marked) {
    check_domain(n_items, n_marked);
    return iteration_floor(std::uint64_t{1} << ceil_log2(n_items), n_marked);
}

std::uint64_t t_new(std::uint64_t n_items, std::uint64_t n_marked) {
    check_domain(n_items, n_marked);
    return iteration_floor(n_items, n_marked);
}

std::optional<double> improvement_factor(std::uint64_t n_items, std::uint64_t n_marked) {
    const std::uint64_t denom = t_new(n_items, n_marked);
    if (denom == 0) return std::nullopt;
    return static_cast<double>(t_old(n_items, n_marked)) / static_cast<double>(denom);
}

std::optional<double> eta(std::uint64_t n_items, std::uint64_t n_marked) {
    const std::uint64_t old_count = t_old(n_items, n_marked);
    if (old_count == 0) return std::nullopt;
    const std::uint64_t new_count = t_new(n_items, n_marked);
    return (1.0 - static_cast<double>(new_count) / static_cast<double>(old_count)) * 100.0;
}

double asymptotic_factor(std::uint64_t n_items) {
    check_domain(n_items, 1);
    const double pow2 = std::ldexp(1.0, ceil_log2(n_items));
    return std::sqrt(pow2 / static_cast<double>(n_items));
}

double asymptotic_eta(std::uint64_t n_items) {
    check_domain(n_items, 1);
    const double pow2 = std::ldexp(1.0, ceil_log2(n_items));
    return (1.0 - std::sqrt(static_cast<double>(n_items) / pow2)) * 100.0;
}

ImprovementRow improvement_row(std::uint64_t n_items, std::uint64_t n_marked) {
    check_domain(n_items, n_marked);
    ImprovementRow row;
    row.n_items = n_items;
    row.n_qubits = ceil_log2(n_items);
    row.n_marked = n_marked;
    row.t_old = t_old(n_items, n_marked);
    row.t_new = t_new(n_items, n_marked);
    row.factor = improvement_factor(n_items, n_marked);
    row.eta_percent = eta(n_items, n_marked);
    row.factor_asymptotic = asymptotic_factor(n_items);
    row.eta_asymptotic_percent = asymptotic_eta(n_items);
    return row;
}

std::vector<ImprovementRow> sweep(std::uint64_t n_from, std::uint64_t n_to,
                                  std::uint64_t n_marked) {
    if (n_from < 2 || n_from > n_to) throw std::invalid_argument("empty or invalid sweep range");
    if (n_to > kMaxItems) throw std::invalid_argument("sweep range exceeds the 2^52 cap");
    if (n_marked < 1) throw std::invalid_argument("marked count must be >= 1");
    std::vector<ImprovementRow> rows;
    for (std::uint64_t n = n_from; n <= n_to; ++n)
        if (n_marked <= n) rows.push_back(improvement_row(n, n_marked));
    return rows;
}

std::vector<ImprovementRow> series_pow2plus1(int n_from, int n_to, std::uint64_t n_marked) {
    if (n_from < 2 || n_from > n_to || n_to > 52)
        throw std::invalid_argument("invalid exponent range");
    if (n_marked < 1) throw std::invalid_argument("marked count must be >= 1");
    std::vector<ImprovementRow> rows;
    for (int n = n_from; n <= n_to; ++n) {
        const std::uint64_t n_items = (std::uint64_t{1} << (n - 1)) + 1;
        if (n_marked <= n_items) rows.push_back(improvement_row(n_items, n_marked));
    }
    return rows;
}

std::string to_csv(std::span<const ImprovementRow> rows) {
    std::string out = "N,n,M,T_old,T_new,f,eta_percent,f_asymptotic,eta_asymptotic_percent\n";
    for (const ImprovementRow& r : rows) {
        out += std::to_string(r.n_items) + ',' + std::to_string(r.n_qubits) + ',' +
               std::to_string(r.n_marked) + ',' + std::to_string(r.t_old) + ',' +
               std::to_string(r.t_new) + ',';
        if (r.factor) out += format_fixed6(*r.factor);
        out += ',';
        if (r.eta_percent) out += format_fixed6(*r.eta_percent);
        out += ',';
        out += format_fixed6(r.factor_asymptotic) + ',' +
               format_fixed6(r.eta_asymptotic_percent) + '\n';
    }
    return out;
}

}  // namespace qsearch::analysis
