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

#include "qes/training.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "qes/errors.hpp"

namespace qes {

namespace {

constexpr double kHalfPi = 1.57079632679489661923;
constexpr double kAdamBeta1 = 0.9;
constexpr double kAdamBeta2 = 0.999;
constexpr double kAdamEps = 1e-8;

// Sub-stream tags for deriving independent RNG streams from the train seed.
constexpr std::uint64_t kShuffleStream = 0x7368756640ULL;

double target_of(int label) { return label == 0 ? 1.0 : -1.0; }

// Shared per-call scratch so the inner loops never allocate.
struct ForwardWorkspace {
    StateVector state;
    StateVector embedded;
    explicit ForwardWorkspace(int n) : state(n), embedded(n) {}
};

// Forward pass with the embedded state cached: valid only without noise,
// where the embedding does not depend on SEL weights. `ws.embedded` must
// already hold embed(|0...0>, perm, x).
double forward_from_embedded(ForwardWorkspace &ws, const SelAnsatz &ansatz, int readout) {
    ws.state = ws.embedded;
    apply_sel_inplace(ws.state, ansatz);
    return ws.state.expval_z(readout);
}

double forward_full(ForwardWorkspace &ws, const Permutation &perm, const SelAnsatz &ansatz,
                    int readout, std::span<const double> x, NoiseCtx *noise) {
    ws.state.reset();
    embed_inplace(ws.state, perm, x, noise);
    apply_sel_inplace(ws.state, ansatz, noise);
    return ws.state.expval_z(readout);
}

// Batch MSE and its parameter-shift gradient in one pass. Under noise every
// forward is an independent trajectory; without noise the embedded state is
// computed once per sample and reused across all 2P shifted evaluations.
double loss_and_gradient(const QnnModel &model, std::span<const Sample> batch, NoiseCtx *noise,
                         std::vector<double> *grad_out) {
    const std::size_t num_weights = model.ansatz.num_weights();
    if (grad_out) {
        grad_out->assign(num_weights, 0.0);
    }
    ForwardWorkspace ws(model.num_qubits());
    SelAnsatz shifted = model.ansatz; // scratch copy whose weights get nudged
    const double inv_batch = 1.0 / static_cast<double>(batch.size());

    double total_loss = 0.0;
    for (const Sample &sample : batch) {
        double f;
        if (noise) {
            f = forward_full(ws, model.perm, model.ansatz, model.readout_qubit, sample.x, noise);
        } else {
            ws.embedded.reset();
            embed_inplace(ws.embedded, model.perm, sample.x);
            f = forward_from_embedded(ws, model.ansatz, model.readout_qubit);
        }
        const double t = target_of(sample.label);
        total_loss += (f - t) * (f - t) * inv_batch;
        if (!grad_out) {
            continue;
        }
        const double residual = 2.0 * (f - t) * inv_batch;
        for (std::size_t p = 0; p < num_weights; ++p) {
            double f_plus;
            double f_minus;
            shifted.weights[p] = model.ansatz.weights[p] + kHalfPi;
            if (noise) {
                f_plus = forward_full(ws, model.perm, shifted, model.readout_qubit, sample.x,
                                      noise);
            } else {
                f_plus = forward_from_embedded(ws, shifted, model.readout_qubit);
            }
            shifted.weights[p] = model.ansatz.weights[p] - kHalfPi;
            if (noise) {
                f_minus = forward_full(ws, model.perm, shifted, model.readout_qubit, sample.x,
                                       noise);
            } else {
                f_minus = forward_from_embedded(ws, shifted, model.readout_qubit);
            }
            shifted.weights[p] = model.ansatz.weights[p];
            (*grad_out)[p] += residual * 0.5 * (f_plus - f_minus);
        }
    }
    return total_loss;
}

} // namespace

void TrainConfig::validate() const {
    if (epochs < 0) {
        throw ConfigError("epochs must be >= 0");
    }
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
        throw ConfigError("learning rate must be positive and finite");
    }
    if (batch_size < 1) {
        throw ConfigError("batch size must be >= 1");
    }
}

QnnModel QnnModel::create(Permutation perm, int num_layers, std::uint64_t model_seed,
                          int readout_qubit) {
    const int n = perm.num_qubits();
    QnnModel model{SelAnsatz::random(n, num_layers, model_seed), std::move(perm), readout_qubit};
    model.validate();
    return model;
}

void QnnModel::validate() const {
    ansatz.validate();
    if (perm.size() != 2 * ansatz.num_qubits) {
        throw ConfigError("permutation has " + std::to_string(perm.size()) +
                          " features but the ansatz expects " +
                          std::to_string(2 * ansatz.num_qubits));
    }
    if (readout_qubit < 0 || readout_qubit >= ansatz.num_qubits) {
        throw ConfigError("readout qubit " + std::to_string(readout_qubit) + " out of range");
    }
}

double forward(const QnnModel &model, std::span<const double> x, NoiseCtx *noise) {
    model.validate();
    ForwardWorkspace ws(model.num_qubits());
    return forward_full(ws, model.perm, model.ansatz, model.readout_qubit, x, noise);
}

int decide_label(double z) { return z >= 0.0 ? 0 : 1; }

int predict(const QnnModel &model, std::span<const double> x, NoiseCtx *noise) {
    const int label = decide_label(forward(model, x, noise));
    return noise ? noise->maybe_flip_label(label) : label;
}

double loss(const QnnModel &model, std::span<const Sample> batch, NoiseCtx *noise) {
    if (batch.empty()) {
        throw UsageError("loss over an empty batch is undefined");
    }
    model.validate();
    return loss_and_gradient(model, batch, noise, nullptr);
}

std::vector<double> gradient(const QnnModel &model, std::span<const Sample> batch,
                             NoiseCtx *noise) {
    if (batch.empty()) {
        throw UsageError("gradient over an empty batch is undefined");
    }
    model.validate();
    std::vector<double> grad;
    loss_and_gradient(model, batch, noise, &grad);
    return grad;
}

double accuracy(const QnnModel &model, const Dataset &data, std::span<const std::size_t> rows,
                NoiseCtx *noise) {
    if (rows.empty()) {
        throw UsageError("accuracy over an empty split is undefined");
    }
    std::size_t correct = 0;
    for (std::size_t r : rows) {
        if (predict(model, data.scaled.row(r), noise) == data.labels[r]) {
            ++correct;
        }
    }
    return 100.0 * static_cast<double>(correct) / static_cast<double>(rows.size());
}

TrainResult train(QnnModel &model, const Dataset &data, const TrainConfig &cfg, NoiseCtx *noise) {
    cfg.validate();
    model.validate();
    if (static_cast<std::size_t>(model.perm.size()) != data.num_features()) {
        throw ConfigError("model expects " + std::to_string(model.perm.size()) +
                          " features, dataset has " + std::to_string(data.num_features()));
    }
    const auto t_start = std::chrono::steady_clock::now();

    const std::size_t num_weights = model.ansatz.num_weights();
    std::vector<double> grad(num_weights, 0.0);
    std::vector<double> adam_m(num_weights, 0.0);
    std::vector<double> adam_v(num_weights, 0.0);

    Rng shuffle_rng(derive_seed(cfg.seed, kShuffleStream));
    std::vector<std::size_t> order = data.train_indices;
    std::vector<Sample> batch;
    batch.reserve(static_cast<std::size_t>(cfg.batch_size));

    TrainResult result;
    std::size_t step = 0;
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        shuffle_rng.shuffle(order);
        for (std::size_t begin = 0; begin < order.size();
             begin += static_cast<std::size_t>(cfg.batch_size)) {
            const std::size_t end =
                std::min(order.size(), begin + static_cast<std::size_t>(cfg.batch_size));
            batch.clear();
            for (std::size_t i = begin; i < end; ++i) {
                batch.push_back(Sample{data.scaled.row(order[i]), data.labels[order[i]]});
            }

            const double batch_loss = loss_and_gradient(model, batch, noise, &grad);
            if (!std::isfinite(batch_loss)) {
                throw TrainingError("training diverged: non-finite loss", step);
            }
            result.loss_curve.push_back(batch_loss);

            ++step;
            for (std::size_t p = 0; p < num_weights; ++p) {
                double &w = model.ansatz.weights[p];
                if (cfg.optimizer == Optimizer::Sgd) {
                    w -= cfg.learning_rate * grad[p];
                } else {
                    adam_m[p] = kAdamBeta1 * adam_m[p] + (1.0 - kAdamBeta1) * grad[p];
                    adam_v[p] = kAdamBeta2 * adam_v[p] + (1.0 - kAdamBeta2) * grad[p] * grad[p];
                    const double m_hat =
                        adam_m[p] / (1.0 - std::pow(kAdamBeta1, static_cast<double>(step)));
                    const double v_hat =
                        adam_v[p] / (1.0 - std::pow(kAdamBeta2, static_cast<double>(step)));
                    w -= cfg.learning_rate * m_hat / (std::sqrt(v_hat) + kAdamEps);
                }
                if (!std::isfinite(w)) {
                    throw TrainingError("training diverged: non-finite weight", step - 1);
                }
            }
        }
    }

    result.train_accuracy = accuracy(model, data, data.train_indices, noise);
    result.test_accuracy = accuracy(model, data, data.test_indices, noise);
    result.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return result;
}

} // namespace qes
