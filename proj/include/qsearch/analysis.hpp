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
#include <string>
#include <vector>

namespace qsearch::analysis {

/// Largest N whose iteration-count floors are computed reliably in double
/// precision (integer radicands stay exactly representable).
inline constexpr std::uint64_t kMaxItems = 1ULL << 52;

/// Iteration count of the rounded-up search space: floor((pi/4) sqrt(2^n / M))
/// with n = ceil(log2 N).
std::uint64_t t_old(std::uint64_t n_items, std::uint64_t n_marked);

/// Iteration count of the exact search space: floor((pi/4) sqrt(N / M)).
std::uint64_t t_new(std::uint64_t n_items, std::uint64_t n_marked);

/// t_old / t_new; empty when t_new == 0.
std::optional<double> improvement_factor(std::uint64_t n_items, std::uint64_t n_marked);

/// (1 - t_new/t_old) * 100; empty when t_old == 0.
std::optional<double> eta(std::uint64_t n_items, std::uint64_t n_marked);

/// sqrt(2^n / N), the large-N/M limit of the improvement factor; in [1, sqrt 2).
double asymptotic_factor(std::uint64_t n_items);

/// (1 - sqrt(N / 2^n)) * 100; in [0, 29.2894).
double asymptotic_eta(std::uint64_t n_items);

struct ImprovementRow {
    std::uint64_t n_items;
    int n_qubits;
    std::uint64_t n_marked;
    std::uint64_t t_old;
    std::uint64_t t_new;
    std::optional<double> factor;
    std::optional<double> eta_percent;
    double factor_asymptotic;
    double eta_asymptotic_percent;
};

ImprovementRow improvement_row(std::uint64_t n_items, std::uint64_t n_marked);

/// One row per N in [n_from, n_to] with M <= N, ascending.
std::vector<ImprovementRow> sweep(std::uint64_t n_from, std::uint64_t n_to,
                                  std::uint64_t n_marked);

/// Rows for N = 2^(n-1) + 1, n in [n_from, n_to]; n_from >= 2.
std::vector<ImprovementRow> series_pow2plus1(int n_from, int n_to, std::uint64_t n_marked);

/// Header plus one line per row, LF endings, floats with 6 decimals,
/// undefined factor/eta rendered as empty fields.
std::string to_csv(std::span<const ImprovementRow> rows);

}  // namespace qsearch::analysis
