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

#include <complex>

namespace qsearch {

using amp_t = std::complex<double>;

/// A 2x2 unitary acting on one qubit, row-major.
struct Unitary2 {
    amp_t m00, m01;
    amp_t m10, m11;
};

/// A polarity-tagged control. polarity == 1 fires on |1>, polarity == 0 on |0>.
struct Control {
    int qubit;
    int polarity;
};

Unitary2 pauli_x_matrix();
Unitary2 pauli_z_matrix();
Unitary2 hadamard_matrix();
Unitary2 ry_matrix(double theta);

Unitary2 dagger(const Unitary2& u);

/// Max |(U†U - I)_{ij}| over the four entries.
double unitarity_defect(const Unitary2& u);
bool is_unitary(const Unitary2& u, double tol = 1e-12);

}  // namespace qsearch
