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
 * Strongly entangling layers: per layer, a general Rot rotation on every
 * qubit followed by a ring of CNOTs whose range depends on the layer index.
 *
 * Layer l (0-indexed) entangles qubit q with qubit (q + r_l) mod n where
 * r_l = (l mod (n-1)) + 1 for n >= 2. The ring degenerates to a single CNOT
 * for n == 2 (the two ring CNOTs would be redundant) and to nothing for
 * n == 1.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "qes/gates.hpp"
#include "qes/noise.hpp"
#include "qes/state.hpp"

namespace qes {

struct SelAnsatz {
    int num_qubits = 0;
    int num_layers = 0;
    std::vector<double> weights; // [layer][qubit][3], radians, row-major

    /// All-zero weights (identity rotations).
    static SelAnsatz zeros(int num_qubits, int num_layers);

    /// Weights drawn uniformly from [0, 2*pi); identical for identical seeds.
    static SelAnsatz random(int num_qubits, int num_layers, std::uint64_t seed);

    double &weight(int layer, int qubit, int k) {
        return weights[static_cast<std::size_t>((layer * num_qubits + qubit) * 3 + k)];
    }
    double weight(int layer, int qubit, int k) const {
        return weights[static_cast<std::size_t>((layer * num_qubits + qubit) * 3 + k)];
    }
    std::size_t num_weights() const { return weights.size(); }

    /// Entangling range r_l of a layer; only meaningful for num_qubits >= 2.
    int entangle_range(int layer) const { return layer % (num_qubits - 1) + 1; }

    /// CNOTs emitted per layer: n for n >= 3, 1 for n == 2, 0 for n == 1.
    int cnots_per_layer() const;

    /// Throws ConfigError if shape fields and weight storage disagree.
    void validate() const;

    bool operator==(const SelAnsatz &) const = default;
};

/// Full gate expansion, layer by layer: n Rot gates then the CNOT ring.
/// Used by structure tests and anywhere a flat gate list is convenient.
std::vector<GateOp> sel_gate_sequence(const SelAnsatz &ansatz);

/// Applies the ansatz. `noise`, when non-null, injects the Pauli channel
/// after every gate.
void apply_sel_inplace(StateVector &state, const SelAnsatz &ansatz, NoiseCtx *noise = nullptr);

StateVector apply_sel(StateVector state, const SelAnsatz &ansatz, NoiseCtx *noise = nullptr);

} // namespace qes
