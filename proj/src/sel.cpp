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

#include "qes/sel.hpp"

#include <string>

#include "qes/errors.hpp"
#include "qes/rng.hpp"

namespace qes {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

SelAnsatz SelAnsatz::zeros(int num_qubits, int num_layers) {
    SelAnsatz a{num_qubits, num_layers, {}};
    a.weights.assign(static_cast<std::size_t>(num_layers) * num_qubits * 3, 0.0);
    a.validate();
    return a;
}

SelAnsatz SelAnsatz::random(int num_qubits, int num_layers, std::uint64_t seed) {
    SelAnsatz a = zeros(num_qubits, num_layers);
    Rng rng(seed);
    for (double &w : a.weights) {
        w = rng.uniform(0.0, kTwoPi);
    }
    return a;
}

int SelAnsatz::cnots_per_layer() const {
    if (num_qubits <= 1) {
        return 0;
    }
    return num_qubits == 2 ? 1 : num_qubits;
}

void SelAnsatz::validate() const {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw ConfigError("SEL ansatz qubit count out of range: " + std::to_string(num_qubits));
    }
    if (num_layers < 0) {
        throw ConfigError("SEL ansatz layer count must be >= 0");
    }
    const std::size_t expected = static_cast<std::size_t>(num_layers) * num_qubits * 3;
    if (weights.size() != expected) {
        throw ConfigError("SEL weight tensor has " + std::to_string(weights.size()) +
                          " entries, expected " + std::to_string(expected));
    }
}

std::vector<GateOp> sel_gate_sequence(const SelAnsatz &ansatz) {
    ansatz.validate();
    const int n = ansatz.num_qubits;
    std::vector<GateOp> gates;
    gates.reserve(static_cast<std::size_t>(ansatz.num_layers) * (n + ansatz.cnots_per_layer()));
    for (int l = 0; l < ansatz.num_layers; ++l) {
        for (int q = 0; q < n; ++q) {
            gates.push_back(GateOp::rot(q, ansatz.weight(l, q, 0), ansatz.weight(l, q, 1),
                                        ansatz.weight(l, q, 2)));
        }
        if (n == 2) {
            gates.push_back(GateOp::cnot(0, 1));
        } else if (n >= 3) {
            const int r = ansatz.entangle_range(l);
            for (int q = 0; q < n; ++q) {
                gates.push_back(GateOp::cnot(q, (q + r) % n));
            }
        }
    }
    return gates;
}

void apply_sel_inplace(StateVector &state, const SelAnsatz &ansatz, NoiseCtx *noise) {
    ansatz.validate();
    if (ansatz.num_qubits != state.num_qubits()) {
        throw ConfigError("SEL ansatz is on " + std::to_string(ansatz.num_qubits) +
                          " qubits but the state has " + std::to_string(state.num_qubits()));
    }
    const int n = ansatz.num_qubits;
    for (int l = 0; l < ansatz.num_layers; ++l) {
        for (int q = 0; q < n; ++q) {
            apply_gate_inplace(state, GateOp::rot(q, ansatz.weight(l, q, 0),
                                                  ansatz.weight(l, q, 1), ansatz.weight(l, q, 2)));
            if (noise) {
                noise->after_1q_gate(state, q);
            }
        }
        if (n == 2) {
            apply_gate_inplace(state, GateOp::cnot(0, 1));
            if (noise) {
                noise->after_2q_gate(state, 0, 1);
            }
        } else if (n >= 3) {
            const int r = ansatz.entangle_range(l);
            for (int q = 0; q < n; ++q) {
                const int t = (q + r) % n;
                apply_gate_inplace(state, GateOp::cnot(q, t));
                if (noise) {
                    noise->after_2q_gate(state, q, t);
                }
            }
        }
    }
}

StateVector apply_sel(StateVector state, const SelAnsatz &ansatz, NoiseCtx *noise) {
    apply_sel_inplace(state, ansatz, noise);
    return state;
}

} // namespace qes
