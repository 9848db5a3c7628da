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

#include "qes/fitness.hpp"

#include <chrono>
#include <string>

#include "qes/errors.hpp"

namespace qes {

namespace {
constexpr std::uint64_t kModelStream = 0x6d6f64656cULL;
}

std::uint64_t EvalContext::model_seed() const { return derive_seed(train.seed, kModelStream); }

FitnessRecord evaluate(const EvalContext &ctx, const Permutation &perm) {
    if (ctx.data == nullptr) {
        throw UsageError("evaluate: no dataset bound");
    }
    const auto t_start = std::chrono::steady_clock::now();

    FitnessRecord rec;
    rec.perm = perm;

    if (!ctx.noise.has_value()) {
        QnnModel model =
            QnnModel::create(perm, ctx.model.num_layers, ctx.model_seed(), ctx.model.readout_qubit);
        const TrainResult r = train(model, *ctx.data, ctx.train);
        rec.train_acc = r.train_accuracy;
        rec.test_acc = r.test_accuracy;
        rec.noisy = false;
        rec.seed = ctx.train.seed;
    } else {
        const NoiseConfig &noise_cfg = *ctx.noise;
        noise_cfg.validate();
        double train_sum = 0.0;
        double test_sum = 0.0;
        for (int run = 0; run < noise_cfg.num_runs; ++run) {
            Rng run_rng(derive_seed(noise_cfg.seed, static_cast<std::uint64_t>(run)));
            NoiseCtx noise{&noise_cfg, &run_rng};
            QnnModel model = QnnModel::create(perm, ctx.model.num_layers, ctx.model_seed(),
                                              ctx.model.readout_qubit);
            try {
                const TrainResult r = train(model, *ctx.data, ctx.train, &noise);
                train_sum += r.train_accuracy;
                test_sum += r.test_accuracy;
            } catch (const TrainingError &e) {
                throw TrainingError("noisy run " + std::to_string(run) + ": " + e.what(),
                                    e.step_index);
            }
        }
        rec.train_acc = train_sum / noise_cfg.num_runs;
        rec.test_acc = test_sum / noise_cfg.num_runs;
        rec.noisy = true;
        rec.seed = noise_cfg.seed;
    }

    rec.combined = combined_score(rec.train_acc, rec.test_acc);
    rec.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return rec;
}

} // namespace qes
