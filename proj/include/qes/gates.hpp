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

/**
 * @file
 * Gate set of the simulator: RX, RY, RZ, the general single-qubit rotation
 * Rot(a, b, c) = RZ(c)*RY(b)*RZ(a) (RZ(a) acts first), and CNOT.
 */

#pragma once

#include <array>

#include "qes/kernels.hpp"
#include "qes/state.hpp"

namespace qes {

using kernels::Mat2;

enum class GateKind { RX, RY, RZ, Rot, CNOT };

/// Number of angle parameters for a gate kind (0, 1 or 3).
int gate_num_params(GateKind kind);

struct GateOp {
    GateKind kind;
    int target = 0;
    int control = -1;                     // CNOT only, -1 otherwise
    std::array<double, 3> params{};       // radians; first gate_num_params used

    static GateOp rx(int target, double theta) { return {GateKind::RX, target, -1, {theta}}; }
    static GateOp ry(int target, double theta) { return {GateKind::RY, target, -1, {theta}}; }
    static GateOp rz(int target, double theta) { return {GateKind::RZ, target, -1, {theta}}; }
    static GateOp rot(int target, double a, double b, double c) {
        return {GateKind::Rot, target, -1, {a, b, c}};
    }
    static GateOp cnot(int control, int target) {
        return {GateKind::CNOT, target, control, {}};
    }

    bool operator==(const GateOp &) const = default;
};

Mat2 rx_matrix(double theta);
Mat2 ry_matrix(double theta);
Mat2 rz_matrix(double theta);
Mat2 rot_matrix(double a, double b, double c);

Mat2 pauli_x_matrix();
Mat2 pauli_y_matrix();
Mat2 pauli_z_matrix();

/// 2x2 matrix of a single-qubit gate. Throws UsageError for CNOT.
Mat2 gate_matrix(const GateOp &gate);

/// Validates gate indices against the state and applies the gate in place.
void apply_gate_inplace(StateVector &state, const GateOp &gate);

/// Value-semantics form: returns U * state.
StateVector apply_gate(StateVector state, const GateOp &gate);

} // namespace qes
