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

#include <doctest.h>

#include "qes/errors.hpp"
#include "qes/study.hpp"

using namespace qes;

TEST_CASE("config round-trips exactly") {
    StudyConfig cfg;
    cfg.strategy = Strategy::Random;
    cfg.n_qubits = 4;
    cfg.seed = 1337;
    cfg.threads = 3;
    cfg.dataset.source = DatasetSpec::Source::Csv;
    cfg.dataset.csv_path = "/tmp/features.csv";
    cfg.dataset.label_column = "cls";
    cfg.dataset.has_header = false;
    cfg.dataset.pca_to = 8;
    cfg.dataset.split_ratio = 0.75;
    cfg.dataset.separation = 2.25;
    cfg.dataset.seed = 99;
    cfg.model.num_layers = 3;
    cfg.model.readout_qubit = 1;
    cfg.train.epochs = 7;
    cfg.train.learning_rate = 0.0123;
    cfg.train.batch_size = 4;
    cfg.train.optimizer = Optimizer::Sgd;
    cfg.train.seed = 5;
    cfg.noise_enabled = true;
    cfg.noise.p1 = 0.01;
    cfg.noise.p2 = 0.025;
    cfg.noise.readout_flip = 0.005;
    cfg.noise.num_runs = 6;
    cfg.noise.seed = 44;
    cfg.ga.s_pop = 10;
    cfg.ga.generations = 4;
    cfg.ga.crossover_rate = 0.9;
    cfg.ga.retention_rate = 0.2;
    cfg.ga.mutation_rate = 0.05;
    cfg.ga.tournament_size = 3;
    cfg.ga.cache_elites = false;
    cfg.ga.seed = 17;
    cfg.random.budget = 40;
    cfg.random.seed = 23;
    cfg.sweep.cap = 720;

    const StudyConfig parsed = StudyConfig::from_text(cfg.to_text());
    CHECK(parsed == cfg);
    // A second round trip is byte-identical.
    CHECK(parsed.to_text() == cfg.to_text());
}

TEST_CASE("defaults parse and round-trip") {
    const StudyConfig defaults;
    const StudyConfig parsed = StudyConfig::from_text(defaults.to_text());
    CHECK(parsed == defaults);
}

TEST_CASE("section seeds derive from the study seed when omitted") {
    const StudyConfig a = StudyConfig::from_text("[study]\nseed = 10\n");
    const StudyConfig b = StudyConfig::from_text("[study]\nseed = 10\n");
    const StudyConfig c = StudyConfig::from_text("[study]\nseed = 11\n");
    CHECK(a.train.seed == b.train.seed);
    CHECK(a.dataset.seed == b.dataset.seed);
    CHECK(a.train.seed != c.train.seed);
    CHECK(a.train.seed != a.dataset.seed); // distinct streams

    // Explicit seeds win over derivation.
    const StudyConfig d = StudyConfig::from_text("[study]\nseed = 10\n[train]\nseed = 123\n");
    CHECK(d.train.seed == 123);
    CHECK(d.dataset.seed == a.dataset.seed);
}

TEST_CASE("unknown keys and sections are rejected") {
    CHECK_THROWS_WITH_AS(StudyConfig::from_text("[study]\nnqubits = 3\n"),
                         doctest::Contains("unknown config key"), ConfigError);
    CHECK_THROWS_WITH_AS(StudyConfig::from_text("[stud]\nseed = 3\n"),
                         doctest::Contains("unknown config key"), ConfigError);
    CHECK_THROWS_AS(StudyConfig::from_text("[study]\nseed = 3\nseed = 4\n"), ConfigError);
    CHECK_THROWS_AS(StudyConfig::from_text("not a config"), ConfigError);
}

TEST_CASE("malformed values are rejected") {
    CHECK_THROWS_AS(StudyConfig::from_text("[study]\nn_qubits = many\n"), ConfigError);
    CHECK_THROWS_AS(StudyConfig::from_text("[train]\nlearning_rate = fast\n"), ConfigError);
    CHECK_THROWS_AS(StudyConfig::from_text("[noise]\nenabled = maybe\n"), ConfigError);
    CHECK_THROWS_AS(StudyConfig::from_text("[study]\nstrategy = grid\n"), ConfigError);
    CHECK_THROWS_AS(StudyConfig::from_text("[dataset]\nsource = oracle\n"), ConfigError);
    CHECK_THROWS_AS(StudyConfig::from_text("[train]\noptimizer = lbfgs\n"), ConfigError);
}

TEST_CASE("validation catches inconsistent studies") {
    StudyConfig cfg;
    cfg.n_qubits = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = StudyConfig{};
    cfg.dataset.source = DatasetSpec::Source::Csv;
    cfg.dataset.csv_path = "";
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = StudyConfig{};
    cfg.model.readout_qubit = 5;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = StudyConfig{};
    cfg.dataset.split_ratio = 1.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("comments and blank lines are ignored") {
    const StudyConfig cfg = StudyConfig::from_text("# a comment\n\n[study]\n; another\nseed = 4\n");
    CHECK(cfg.seed == 4);
}
