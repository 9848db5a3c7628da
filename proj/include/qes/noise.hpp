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
 * Stochastic Pauli-trajectory noise.
 *
 * Noise is simulated on the pure statevector: after each ideal gate, each
 * touched qubit independently suffers a uniformly random Pauli (X, Y or Z)
 * with probability p1 (single-qubit gates) or p2 (two-qubit gates). Decoded
 * labels can additionally be flipped with probability readout_flip.
 * Averaging over num_runs independent trajectories happens in the fitness
 * layer. Pauli errors are unitary, so trajectories keep norm 1.
 */

#pragma once

#include <cstdint>

#include "qes/gates.hpp"
#include "qes/rng.hpp"
#include "qes/state.hpp"

namespace qes {

struct NoiseConfig {
    double p1 = 0.0;           // Pauli-error probability after a 1-qubit gate
    double p2 = 0.0;           // per involved qubit, after a 2-qubit gate
    double readout_flip = 0.0; // probability of flipping a decoded label
    int num_runs = 10;
    std::uint64_t seed = 0;

    /// Throws ConfigError unless all probabilities are in [0,1] and
    /// num_runs >= 1.
    void validate() const;

    bool is_noiseless() const { return p1 == 0.0 && p2 == 0.0 && readout_flip == 0.0; }

    bool operator==(const NoiseConfig &) const = default;
};

/// Per-trajectory noise state threaded through circuit execution. A null
/// NoiseCtx pointer anywhere in the library means ideal execution.
struct NoiseCtx {
    const NoiseConfig *cfg;
    Rng *rng;

    /// With probability p, applies a uniformly random Pauli to `qubit`.
    /// The RNG is only consumed when p > 0, so a zero-probability config
    /// reproduces the ideal pipeline bit for bit.
    void maybe_pauli(StateVector &state, int qubit, double p);

    void after_1q_gate(StateVector &state, int qubit) { maybe_pauli(state, qubit, cfg->p1); }
    void after_2q_gate(StateVector &state, int q_a, int q_b) {
        maybe_pauli(state, q_a, cfg->p2);
        maybe_pauli(state, q_b, cfg->p2);
    }

    /// Label-level readout error: flips `label` with probability readout_flip.
    int maybe_flip_label(int label);
};

/// Applies `gate` ideally, then the per-qubit Pauli error channel drawn from
/// `rng`. With all probabilities zero this is exactly apply_gate_inplace.
void apply_noisy_gate(StateVector &state, const GateOp &gate, const NoiseConfig &cfg, Rng &rng);

} // namespace qes
