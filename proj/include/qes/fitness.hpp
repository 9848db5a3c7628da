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
 * The combined-score fitness shared by every search strategy: train a fresh
 * model under one permutation, score = (train accuracy + test accuracy) / 2.
 *
 * The model init seed is derived once from the train seed and shared across
 * all permutations of a study, so the only thing that varies between two
 * fitness evaluations is the feature-to-qubit mapping. Under noise the
 * score averages num_runs independent trajectories whose seeds are
 * splitmix-derived from the noise seed, identically for every permutation.
 */

#pragma once

#include <optional>

#include "qes/dataset.hpp"
#include "qes/embedding.hpp"
#include "qes/noise.hpp"
#include "qes/training.hpp"

namespace qes {

struct ModelConfig {
    int num_layers = 1;
    int readout_qubit = 0;

    bool operator==(const ModelConfig &) const = default;
};

struct FitnessRecord {
    Permutation perm;
    double train_acc = 0.0; // percent
    double test_acc = 0.0;  // percent
    double combined = 0.0;  // (train_acc + test_acc) / 2, exactly
    bool noisy = false;
    std::uint64_t seed = 0; // train seed (noiseless) or noise seed (noisy)
    double wall_time = 0.0; // seconds
};

inline double combined_score(double train_acc, double test_acc) {
    return (train_acc + test_acc) / 2.0;
}

struct EvalContext {
    const Dataset *data = nullptr;
    ModelConfig model;
    TrainConfig train;
    std::optional<NoiseConfig> noise; // absent = noiseless path

    /// Model init seed shared by every permutation of the study.
    std::uint64_t model_seed() const;
};

/// Trains a fresh model under `perm` and returns the scored record. With a
/// noise config present, averages train/test accuracies over
/// noise->num_runs independent noisy train+eval cycles.
FitnessRecord evaluate(const EvalContext &ctx, const Permutation &perm);

} // namespace qes
