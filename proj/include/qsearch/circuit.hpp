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

#include <cstddef>
#include <string>
#include <vector>

#include "qsearch/state_vector.hpp"

namespace qsearch {

enum class GateKind { X, H, RY, Z };

/// One gate in the IR. `angle` is meaningful for RY only.
struct GateOp {
    GateKind kind;
    int target;
    std::vector<Control> controls;
    double angle = 0.0;
};

GateOp make_x(int target, std::vector<Control> controls = {});
GateOp make_h(int target, std::vector<Control> controls = {});
GateOp make_z(int target, std::vector<Control> controls = {});
GateOp make_ry(double theta, int target, std::vector<Control> controls = {});

Unitary2 gate_matrix(const GateOp& op);

/// Ordered gate list over a fixed-width register. Immutable by convention
/// once built; all transforms below return new circuits.
struct Circuit {
    int n_qubits = 0;
    std::vector<GateOp> ops;
    std::string label;
};

/// Throws if any op references a qubit out of range, repeats a control, or
/// targets one of its own controls.
void validate(const Circuit& c);

/// a followed by b; widths must match. The label of a is kept unless empty.
Circuit compose(const Circuit& a, const Circuit& b);

/// Reverses the op order and negates RY angles. X, H, Z are self-inverse.
Circuit inverse(const Circuit& c);

std::size_t gate_count(const Circuit& c);

/// Greedy left-to-right layering: an op starts one layer after the deepest
/// layer already touching any of its qubits (target or control).
std::size_t depth(const Circuit& c);

StateVector simulate(const Circuit& c, StateVector input);

/// Emits a self-contained OpenQASM 3 program: version header, the stdgates
/// include, comment header (label, gate_count, depth), one register `q` of
/// width n_qubits, then the gates in order. Positive controls use `ctrl @`,
/// zero-controls `negctrl @`. RY angles are printed with 17 significant
/// digits. Byte-for-byte deterministic for a given circuit.
std::string to_qasm3(const Circuit& c);
std::string to_qasm3(const Circuit& c, const std::vector<std::string>& extra_comments);

}  // namespace qsearch
