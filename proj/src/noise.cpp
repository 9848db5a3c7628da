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

#include "qes/noise.hpp"

#include "qes/errors.hpp"

namespace qes {

void NoiseConfig::validate() const {
    auto check_prob = [](double p, const char *name) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ConfigError(std::string("noise probability ") + name + " must be in [0,1]");
        }
    };
    check_prob(p1, "p1");
    check_prob(p2, "p2");
    check_prob(readout_flip, "readout_flip");
    if (num_runs < 1) {
        throw ConfigError("noise num_runs must be >= 1");
    }
}

void NoiseCtx::maybe_pauli(StateVector &state, int qubit, double p) {
    if (p <= 0.0) {
        return; // no RNG consumption in the noiseless limit
    }
    if (rng->uniform() >= p) {
        return;
    }
    const std::uint64_t which = rng->uniform_int(3);
    const Mat2 pauli = which == 0   ? pauli_x_matrix()
                       : which == 1 ? pauli_y_matrix()
                                    : pauli_z_matrix();
    kernels::active_kernels().apply_matrix1q(state.data(), state.size(), qubit, pauli);
}

int NoiseCtx::maybe_flip_label(int label) {
    if (cfg->readout_flip <= 0.0) {
        return label;
    }
    if (rng->uniform() < cfg->readout_flip) {
        return 1 - label;
    }
    return label;
}

void apply_noisy_gate(StateVector &state, const GateOp &gate, const NoiseConfig &cfg, Rng &rng) {
    cfg.validate();
    apply_gate_inplace(state, gate);
    NoiseCtx ctx{&cfg, &rng};
    if (gate.kind == GateKind::CNOT) {
        ctx.after_2q_gate(state, gate.control, gate.target);
    } else {
        ctx.after_1q_gate(state, gate.target);
    }
}

} // namespace qes
