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
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "qsearch/circuit.hpp"

namespace qsearch {

GateOp make_x(int target, std::vector<Control> controls) {
    return {GateKind::X, target, std::move(controls), 0.0};
}

GateOp make_h(int target, std::vector<Control> controls) {
    return {GateKind::H, target, std::move(controls), 0.0};
}

GateOp make_z(int target, std::vector<Control> controls) {
    return {GateKind::Z, target, std::move(controls), 0.0};
}

GateOp make_ry(double theta, int target, std::vector<Control> controls) {
    if (!std::isfinite(theta)) throw std::invalid_argument("RY angle must be finite");
    return {GateKind::RY, target, std::move(controls), theta};
}

Unitary2 gate_matrix(const GateOp& op) {
    switch (op.kind) {
        case GateKind::X: return pauli_x_matrix();
        case GateKind::H: return hadamard_matrix();
        case GateKind::Z: return pauli_z_matrix();
        case GateKind::RY: return ry_matrix(op.angle);
    }
    throw std::logic_error("unknown gate kind");
}

void validate(const Circuit& c) {
    if (c.n_qubits < 1) throw std::invalid_argument("circuit must have at least one qubit");
    for (const GateOp& op : c.ops) {
        if (op.target < 0 || op.target >= c.n_qubits)
            throw std::out_of_range("gate target out of range");
        std::uint64_t seen = std::uint64_t{1} << op.target;
        for (const Control& ctl : op.controls) {
            if (ctl.qubit < 0 || ctl.qubit >= c.n_qubits)
                throw std::out_of_range("control qubit out of range");
            const std::uint64_t bit = std::uint64_t{1} << ctl.qubit;
            if (seen & bit) throw std::invalid_argument("duplicate qubit in gate operands");
            seen |= bit;
        }
        if (op.kind == GateKind::RY && !std::isfinite(op.angle))
            throw std::invalid_argument("RY angle must be finite");
    }
}

Circuit compose(const Circuit& a, const Circuit& b) {
    if (a.n_qubits != b.n_qubits)
        throw std::invalid_argument("composed circuits must have equal widths");
    Circuit out;
    out.n_qubits = a.n_qubits;
    out.ops.reserve(a.ops.size() + b.ops.size());
    out.ops.insert(out.ops.end(), a.ops.begin(), a.ops.end());
    out.ops.insert(out.ops.end(), b.ops.begin(), b.ops.end());
    out.label = a.label.empty() ? b.label : a.label;
    return out;
}

Circuit inverse(const Circuit& c) {
    Circuit out;
    out.n_qubits = c.n_qubits;
    out.label = c.label;
    out.ops.assign(c.ops.rbegin(), c.ops.rend());
    for (GateOp& op : out.ops)
        if (op.kind == GateKind::RY) op.angle = -op.angle;
    return out;
}

std::size_t gate_count(const Circuit& c) { return c.ops.size(); }

std::size_t depth(const Circuit& c) {
    std::vector<std::size_t> frontier(static_cast<std::size_t>(c.n_qubits), 0);
    std::size_t max_layer = 0;
    for (const GateOp& op : c.ops) {
        std::size_t layer = frontier[static_cast<std::size_t>(op.target)];
        for (const Control& ctl : op.controls)
            layer = std::max(layer, frontier[static_cast<std::size_t>(ctl.qubit)]);
        ++layer;
        frontier[static_cast<std::size_t>(op.target)] = layer;
        for (const Control& ctl : op.controls)
            frontier[static_cast<std::size_t>(ctl.qubit)] = layer;
        max_layer = std::max(max_layer, layer);
    }
    return max_layer;
}

StateVector simulate(const Circuit& c, StateVector input) {
    if (input.n_qubits() != c.n_qubits)
        throw std::invalid_argument("state width does not match circuit width");
    for (const GateOp& op : c.ops)
        apply_gate(input, op.controls, op.target, gate_matrix(op));
    return input;
}

namespace {

std::string format_angle(double theta) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", theta);
    return buf;
}

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "x";
        case GateKind::H: return "h";
        case GateKind::Z: return "z";
        case GateKind::RY: return "ry";
    }
    return "?";
}

}  // namespace

std::string to_qasm3(const Circuit& c) { return to_qasm3(c, {}); }

std::string to_qasm3(const Circuit& c, const std::vector<std::string>& extra_comments) {
    validate(c);
    std::string out;
    out += "OPENQASM 3.0;\n";
    out += "include \"stdgates.inc\";\n";
    if (!c.label.empty()) out += "// label: " + c.label + "\n";
    out += "// gate_count: " + std::to_string(gate_count(c)) + "\n";
    out += "// depth: " + std::to_string(depth(c)) + "\n";
    for (const std::string& line : extra_comments) out += "// " + line + "\n";
    out += "qubit[" + std::to_string(c.n_qubits) + "] q;\n";
    for (const GateOp& op : c.ops) {
        std::string line;
        for (const Control& ctl : op.controls)
            line += ctl.polarity ? "ctrl @ " : "negctrl @ ";
        line += gate_name(op.kind);
        if (op.kind == GateKind::RY) line += "(" + format_angle(op.angle) + ")";
        line += " ";
        for (const Control& ctl : op.controls)
            line += "q[" + std::to_string(ctl.qubit) + "], ";
        line += "q[" + std::to_string(op.target) + "];\n";
        out += line;
    }
    return out;
}

}  // namespace qsearch
