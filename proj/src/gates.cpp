// Copyright 2026 The qesearch Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qes/gates.hpp"

#include <cmath>
#include <string>

#include "qes/errors.hpp"

namespace qes {

int gate_num_params(GateKind kind) {
    switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
        return 1;
    case GateKind::Rot:
        return 3;
    case GateKind::CNOT:
        return 0;
    }
    return 0;
}

Mat2 rx_matrix(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return Mat2{{c, 0.0}, {0.0, -s}, {0.0, -s}, {c, 0.0}};
}

Mat2 ry_matrix(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return Mat2{{c, 0.0}, {-s, 0.0}, {s, 0.0}, {c, 0.0}};
}

Mat2 rz_matrix(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return Mat2{{c, -s}, {0.0, 0.0}, {0.0, 0.0}, {c, s}};
}

Mat2 rot_matrix(double a, double b, double c) {
    // RZ(a) first, then RY(b), then RZ(c).
    return kernels::matmul(rz_matrix(c), kernels::matmul(ry_matrix(b), rz_matrix(a)));
}

Mat2 pauli_x_matrix() { return Mat2{{0, 0}, {1, 0}, {1, 0}, {0, 0}}; }
Mat2 pauli_y_matrix() { return Mat2{{0, 0}, {0, -1}, {0, 1}, {0, 0}}; }
Mat2 pauli_z_matrix() { return Mat2{{1, 0}, {0, 0}, {0, 0}, {-1, 0}}; }

Mat2 gate_matrix(const GateOp &gate) {
    switch (gate.kind) {
    case GateKind::RX:
        return rx_matrix(gate.params[0]);
    case GateKind::RY:
        return ry_matrix(gate.params[0]);
    case GateKind::RZ:
        return rz_matrix(gate.params[0]);
    case GateKind::Rot:
        return rot_matrix(gate.params[0], gate.params[1], gate.params[2]);
    case GateKind::CNOT:
        throw UsageError("gate_matrix: CNOT has no 2x2 matrix");
    }
    throw UsageError("gate_matrix: unknown gate kind");
}

namespace {

void check_index(int qubit, int n, const char *what) {
    if (qubit < 0 || qubit >= n) {
        throw ConfigError(std::string(what) + " index " + std::to_string(qubit) +
                          " out of range for " + std::to_string(n) + " qubits");
    }
}

} // namespace

void apply_gate_inplace(StateVector &state, const GateOp &gate) {
    const int n = state.num_qubits();
    check_index(gate.target, n, "target");
    if (gate.kind == GateKind::CNOT) {
        check_index(gate.control, n, "control");
        if (gate.control == gate.target) {
            throw ConfigError("CNOT: control equals target (" + std::to_string(gate.target) + ")");
        }
        kernels::active_kernels().apply_cnot(state.data(), state.size(), gate.control,
                                             gate.target);
        return;
    }
    const Mat2 u = gate_matrix(gate);
    kernels::active_kernels().apply_matrix1q(state.data(), state.size(), gate.target, u);
}

StateVector apply_gate(StateVector state, const GateOp &gate) {
    apply_gate_inplace(state, gate);
    return state;
}

} // namespace qes
