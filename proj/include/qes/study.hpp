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
 * Study configuration: everything needed to reproduce one search run,
 * serializable to a sectioned key=value text file. Parsing an unknown
 * section or key is an error; serialize() always writes every key with the
 * resolved values, so parse(serialize(c)) == c.
 *
 * Section seeds left unset in a file are derived deterministically from the
 * [study] seed, one fixed stream per section.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qes/dataset.hpp"
#include "qes/fitness.hpp"
#include "qes/noise.hpp"
#include "qes/search.hpp"
#include "qes/training.hpp"

namespace qes {

struct DatasetSpec {
    enum class Source { Synth, Csv };
    Source source = Source::Synth;

    // csv
    std::string csv_path;
    std::string label_column = "label";
    bool has_header = true;
    int pca_to = 0; // reduce loaded features to this many columns; 0 = off

    // synth
    int n_per_class = 200;
    double separation = 4.0;
    bool planted = false;

    // shared
    double split_ratio = 0.8;
    std::uint64_t seed = 0;

    bool operator==(const DatasetSpec &) const = default;
};

struct RandomSearchConfig {
    std::uint64_t budget = 100;
    std::uint64_t seed = 0;

    bool operator==(const RandomSearchConfig &) const = default;
};

struct SweepConfig {
    std::uint64_t cap = 5040;

    bool operator==(const SweepConfig &) const = default;
};

struct StudyConfig {
    Strategy strategy = Strategy::Ga;
    int n_qubits = 3;
    std::uint64_t seed = 42; // base seed; fills unset section seeds at parse
    int threads = 0;         // 0 = hardware concurrency

    DatasetSpec dataset;
    ModelConfig model;
    TrainConfig train;
    bool noise_enabled = false;
    NoiseConfig noise;
    GaConfig ga;
    RandomSearchConfig random;
    SweepConfig sweep;

    static StudyConfig from_text(const std::string &text);
    static StudyConfig from_file(const std::string &path);
    std::string to_text() const;

    void validate() const;

    bool operator==(const StudyConfig &) const = default;
};

/// Materializes the dataset a config describes and checks that its feature
/// count matches 2 * n_qubits.
Dataset build_dataset(const StudyConfig &cfg);

struct StudyResult {
    StudyConfig config; // resolved
    SearchReport report;
};

/// Runs the configured strategy end to end. `threads_override`, when > 0,
/// wins over the config's thread count.
StudyResult run_study(const StudyConfig &cfg, int threads_override = 0);

} // namespace qes
