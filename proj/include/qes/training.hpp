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
 * Training a QNN for one fixed permutation: forward pass, MSE loss against
 * +/-1 targets, exact parameter-shift gradients and the optimizer loop.
 *
 * Readout is <Z> on a single qubit (default 0); label 0 maps to target +1
 * and label 1 to target -1, the decision rule is the sign of <Z> with ties
 * going to class 0. Everything is deterministic given the config seeds.
 */

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qes/dataset.hpp"
#include "qes/embedding.hpp"
#include "qes/noise.hpp"
#include "qes/sel.hpp"

namespace qes {

enum class Optimizer { Sgd, Adam };

struct TrainConfig {
    int epochs = 5;
    double learning_rate = 3e-3;
    int batch_size = 16;
    std::uint64_t seed = 0;
    Optimizer optimizer = Optimizer::Adam;

    void validate() const;

    bool operator==(const TrainConfig &) const = default;
};

struct TrainResult {
    double train_accuracy = 0.0; // percent in [0, 100]
    double test_accuracy = 0.0;  // percent in [0, 100]
    std::vector<double> loss_curve; // one batch MSE per optimizer step
    double wall_time = 0.0;         // seconds
};

struct QnnModel {
    SelAnsatz ansatz;
    Permutation perm;
    int readout_qubit = 0;

    /// Fresh model: SEL weights drawn uniformly from [0, 2*pi) using
    /// `model_seed`, so two models with the same seed are identical.
    static QnnModel create(Permutation perm, int num_layers, std::uint64_t model_seed,
                           int readout_qubit = 0);

    int num_qubits() const { return ansatz.num_qubits; }

    /// Throws ConfigError if ansatz/permutation/readout shapes disagree.
    void validate() const;
};

struct Sample {
    std::span<const double> x; // scaled features, radians
    int label;                 // 0 or 1
};

/// <Z> on the readout qubit of SEL(embed(|0...0>, perm, x)). Value in [-1,1].
double forward(const QnnModel &model, std::span<const double> x, NoiseCtx *noise = nullptr);

/// The decision rule applied to a readout expectation: class 0 when z >= 0
/// (ties go to class 0), class 1 otherwise.
int decide_label(double z);

/// Class decision decide_label(forward(x)). Under noise the decoded label
/// may additionally be flipped with probability readout_flip.
int predict(const QnnModel &model, std::span<const double> x, NoiseCtx *noise = nullptr);

/// Mean squared error between forward(x) and the +/-1 target over a
/// nonempty batch.
double loss(const QnnModel &model, std::span<const Sample> batch, NoiseCtx *noise = nullptr);

/// Exact gradient of the batch MSE w.r.t. every SEL weight via the
/// parameter-shift rule d<Z>/dtheta = [f(theta+pi/2) - f(theta-pi/2)] / 2.
/// Returned vector is shaped like ansatz.weights.
std::vector<double> gradient(const QnnModel &model, std::span<const Sample> batch,
                             NoiseCtx *noise = nullptr);

/// Percent of rows whose prediction matches the label. Throws UsageError on
/// an empty index set.
double accuracy(const QnnModel &model, const Dataset &data, std::span<const std::size_t> rows,
                NoiseCtx *noise = nullptr);

/// Minibatch training on the dataset's train split, then accuracy on both
/// splits. Mutates `model` in place. Throws TrainingError (with the step
/// index) if the loss or a weight becomes non-finite.
TrainResult train(QnnModel &model, const Dataset &data, const TrainConfig &cfg,
                  NoiseCtx *noise = nullptr);

} // namespace qes
