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

#include <array>
#include <cmath>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "qes/errors.hpp"
#include "qes/training.hpp"

using namespace qes;

namespace {

QnnModel zero_model(int n, int layers) {
    return QnnModel{SelAnsatz::zeros(n, layers), Permutation::identity(n), 0};
}

// Toy linearly separable dataset on one qubit: 20 points, strong planted
// separation in both features.
Dataset toy_dataset() {
    SynthOptions opts;
    opts.n_features = 2;
    opts.n_per_class = 10;
    opts.separation = 8.0;
    opts.seed = 424242;
    opts.split_ratio = 0.8;
    return synth_blobs(opts);
}

} // namespace

TEST_CASE("forward of the zero model on zero features is +1") {
    const QnnModel model = zero_model(3, 1);
    const std::array<double, 6> x{0, 0, 0, 0, 0, 0};
    CHECK(forward(model, x) == 1.0);
}

TEST_CASE("forward stays within [-1, 1]") {
    std::mt19937 gen(13);
    std::uniform_real_distribution<double> angle(-3.14, 3.14);
    for (int rep = 0; rep < 25; ++rep) {
        const QnnModel model =
            QnnModel::create(Permutation::identity(2), 2, gen(), 0);
        const std::array<double, 4> x{angle(gen), angle(gen), angle(gen), angle(gen)};
        const double f = forward(model, x);
        CHECK(f >= -1.0 - 1e-12);
        CHECK(f <= 1.0 + 1e-12);
    }
}

TEST_CASE("single-qubit closed form: forward = cos(beta)") {
    // Embedding is the identity at x = 0; Rot(0, beta, 0) = RY(beta), and
    // <Z> after RY(beta)|0> is cos(beta).
    for (const double beta : {0.0, 0.3, 1.1, 2.0, -0.8, 3.0}) {
        QnnModel model = zero_model(1, 1);
        model.ansatz.weight(0, 0, 1) = beta;
        const std::array<double, 2> x{0.0, 0.0};
        CHECK(forward(model, x) == doctest::Approx(std::cos(beta)).epsilon(1e-12));
    }
}

TEST_CASE("decision rule and tie-break") {
    CHECK(decide_label(1.0) == 0);
    CHECK(decide_label(-0.3) == 1);
    CHECK(decide_label(0.0) == 0); // tie goes to class 0
    CHECK(decide_label(-0.0) == 0);

    const QnnModel model = zero_model(1, 0);
    const std::array<double, 2> x{0.0, 0.0};
    CHECK(predict(model, x) == 0);
}

TEST_CASE("loss values") {
    // Perfect prediction: zero model, zero features, label 0 -> f = +1.
    const QnnModel model = zero_model(1, 0);
    const std::array<double, 2> zeros{0.0, 0.0};
    const std::vector<Sample> perfect{{zeros, 0}};
    CHECK(loss(model, perfect) == 0.0);

    // f ~ 0 (equator states) gives loss ~ 1 for either label.
    QnnModel equator = zero_model(1, 1);
    equator.ansatz.weight(0, 0, 1) = 1.57079632679489661923; // RY(pi/2)
    const std::vector<Sample> both{{zeros, 0}, {zeros, 1}};
    CHECK(loss(equator, both) == doctest::Approx(1.0).epsilon(1e-12));

    // f = 0.5 against target +1: (0.5 - 1)^2 = 0.25.
    QnnModel half = zero_model(1, 1);
    half.ansatz.weight(0, 0, 1) = std::acos(0.5);
    const std::vector<Sample> single{{zeros, 0}};
    CHECK(loss(half, single) == doctest::Approx(0.25).epsilon(1e-12));

    CHECK_THROWS_AS(loss(model, std::span<const Sample>{}), UsageError);
}

TEST_CASE("gradient vanishes at a perfect minimum") {
    const QnnModel model = zero_model(2, 1);
    const std::array<double, 4> x{0, 0, 0, 0};
    const std::vector<Sample> batch{{x, 0}};
    for (const double g : gradient(model, batch)) {
        CHECK(g == 0.0);
    }
}

TEST_CASE("parameter-shift gradient matches finite differences") {
    std::mt19937 gen(2718);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    std::uniform_int_distribution<int> coin(0, 1);
    const double h = 1e-5;

    for (int rep = 0; rep < 12; ++rep) {
        const int n = 1 + static_cast<int>(gen() % 4);   // n <= 4
        const int layers = 1 + static_cast<int>(gen() % 2); // L <= 2
        QnnModel model = QnnModel::create(Permutation::identity(n), layers, gen(), 0);

        std::vector<std::vector<double>> xs(3, std::vector<double>(static_cast<std::size_t>(2 * n)));
        std::vector<Sample> batch;
        for (auto &x : xs) {
            for (double &v : x) {
                v = angle(gen);
            }
            batch.push_back(Sample{x, coin(gen)});
        }

        const std::vector<double> analytic = gradient(model, batch);
        for (std::size_t p = 0; p < model.ansatz.num_weights(); ++p) {
            QnnModel probe = model;
            probe.ansatz.weights[p] = model.ansatz.weights[p] + h;
            const double up = loss(probe, batch);
            probe.ansatz.weights[p] = model.ansatz.weights[p] - h;
            const double down = loss(probe, batch);
            const double numeric = (up - down) / (2.0 * h);
            CHECK(std::abs(analytic[p] - numeric) < 1e-5);
        }
    }
}

TEST_CASE("training the separable toy task") {
    const Dataset data = toy_dataset();
    TrainConfig cfg;
    cfg.epochs = 50;
    cfg.learning_rate = 0.05;
    cfg.batch_size = 16;
    cfg.seed = 7;

    QnnModel model = QnnModel::create(Permutation::identity(1), 1, 99, 0);
    const TrainResult result = train(model, data, cfg);

    CHECK(result.train_accuracy >= 90.0);
    CHECK(result.loss_curve.size() == 50); // 16 train rows, one batch per epoch
    for (const double l : result.loss_curve) {
        CHECK(std::isfinite(l));
    }

    // Frozen regression values for the exact same run.
    std::ifstream golden(std::string(QES_TEST_DATA_DIR) + "/toy_train_golden.txt");
    REQUIRE(golden.good());
    double expected_train = 0.0;
    double expected_test = 0.0;
    golden >> expected_train >> expected_test;
    CHECK(result.train_accuracy == expected_train);
    CHECK(result.test_accuracy == expected_test);
}

TEST_CASE("training is deterministic") {
    const Dataset data = toy_dataset();
    TrainConfig cfg;
    cfg.epochs = 3;
    cfg.seed = 1234;

    QnnModel a = QnnModel::create(Permutation::identity(1), 1, 5, 0);
    QnnModel b = QnnModel::create(Permutation::identity(1), 1, 5, 0);
    const TrainResult ra = train(a, data, cfg);
    const TrainResult rb = train(b, data, cfg);
    CHECK(ra.train_accuracy == rb.train_accuracy);
    CHECK(ra.test_accuracy == rb.test_accuracy);
    CHECK(ra.loss_curve == rb.loss_curve);
    CHECK(a.ansatz.weights == b.ansatz.weights);
}

TEST_CASE("zero epochs evaluates the untrained model") {
    const Dataset data = toy_dataset();
    TrainConfig cfg;
    cfg.epochs = 0;

    QnnModel model = QnnModel::create(Permutation::identity(1), 1, 5, 0);
    const std::vector<double> initial_weights = model.ansatz.weights;
    const TrainResult result = train(model, data, cfg);
    CHECK(result.loss_curve.empty());
    CHECK(model.ansatz.weights == initial_weights);
    CHECK(result.train_accuracy >= 0.0);
    CHECK(result.train_accuracy <= 100.0);
}

TEST_CASE("divergence raises TrainingError with a step index") {
    const Dataset data = toy_dataset();
    TrainConfig cfg;
    cfg.epochs = 1;

    QnnModel model = QnnModel::create(Permutation::identity(1), 1, 5, 0);
    model.ansatz.weights[0] = std::numeric_limits<double>::quiet_NaN();
    try {
        train(model, data, cfg);
        FAIL("expected TrainingError");
    } catch (const TrainingError &e) {
        CHECK(e.step_index == 0);
    }
}

TEST_CASE("sgd optimizer is selectable") {
    const Dataset data = toy_dataset();
    TrainConfig adam;
    adam.epochs = 2;
    TrainConfig sgd = adam;
    sgd.optimizer = Optimizer::Sgd;

    QnnModel a = QnnModel::create(Permutation::identity(1), 1, 5, 0);
    QnnModel b = QnnModel::create(Permutation::identity(1), 1, 5, 0);
    train(a, data, adam);
    train(b, data, sgd);
    CHECK(a.ansatz.weights != b.ansatz.weights);
}

TEST_CASE("accuracy over an empty split is an error") {
    const Dataset data = toy_dataset();
    const QnnModel model = zero_model(1, 1);
    CHECK_THROWS_AS(accuracy(model, data, {}), UsageError);
}
