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
#include <cmath>

#include "qsearch/gates.hpp"

namespace qsearch {

Unitary2 pauli_x_matrix() { return {{0, 0}, {1, 0}, {1, 0}, {0, 0}}; }

Unitary2 pauli_z_matrix() { return {{1, 0}, {0, 0}, {0, 0}, {-1, 0}}; }

Unitary2 hadamard_matrix() {
    const double s = 1.0 / std::sqrt(2.0);
    return {{s, 0}, {s, 0}, {s, 0}, {-s, 0}};
}

Unitary2 ry_matrix(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {{c, 0}, {-s, 0}, {s, 0}, {c, 0}};
}

Unitary2 dagger(const Unitary2& u) {
    return {std::conj(u.m00), std::conj(u.m10), std::conj(u.m01), std::conj(u.m11)};
}

double unitarity_defect(const Unitary2& u) {
    const Unitary2 d = dagger(u);
    // rows of d times columns of u
    const amp_t p00 = d.m00 * u.m00 + d.m01 * u.m10;
    const amp_t p01 = d.m00 * u.m01 + d.m01 * u.m11;
    const amp_t p10 = d.m10 * u.m00 + d.m11 * u.m10;
    const amp_t p11 = d.m10 * u.m01 + d.m11 * u.m11;
    return std::max({std::abs(p00 - amp_t{1, 0}), std::abs(p01), std::abs(p10),
                     std::abs(p11 - amp_t{1, 0})});
}

bool is_unitary(const Unitary2& u, double tol) { return unitarity_defect(u) <= tol; }

}  // namespace qsearch
