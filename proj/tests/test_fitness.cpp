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

#include "qes/fitness.hpp"

using namespace qes;

TEST_CASE("combined score is the mean of the two accuracies") {
    CHECK(combined_score(93.37, 93.0) == doctest::Approx(93.185).epsilon(1e-12));
    CHECK(combined_score(72.0, 77.5) == 74.75);
    CHECK(combined_score(100.0, 100.0) == 100.0);
}

TEST_CASE("evaluate is a pure function of its inputs") {
    SynthOptions opts;
    opts.n_features = 4;
    opts.n_per_class = 12;
    opts.separation = 3.0;
    opts.seed = 5;
    const Dataset data = synth_blobs(opts);

    EvalContext ctx;
    ctx.data = &data;
    ctx.train.epochs = 2;
    ctx.train.seed = 88;
    ctx.model.num_layers = 1;

    const Permutation perm = Permutation::parse("2,0,3,1");
    const FitnessRecord a = evaluate(ctx, perm);
    const FitnessRecord b = evaluate(ctx, perm);
    CHECK(a.train_acc == b.train_acc);
    CHECK(a.test_acc == b.test_acc);
    CHECK(a.combined == b.combined);
    CHECK(a.perm == perm);
    CHECK(a.combined == combined_score(a.train_acc, a.test_acc));
    CHECK_FALSE(a.noisy);
    CHECK(a.seed == ctx.train.seed);
}

TEST_CASE("the model init seed is shared across permutations") {
    EvalContext a;
    a.train.seed = 123;
    EvalContext b;
    b.train.seed = 123;
    CHECK(a.model_seed() == b.model_seed());
    b.train.seed = 124;
    CHECK(a.model_seed() != b.model_seed());
}

TEST_CASE("records satisfy the combined-score identity") {
    SynthOptions opts;
    opts.n_features = 4;
    opts.n_per_class = 8;
    opts.separation = 2.0;
    opts.seed = 6;
    const Dataset data = synth_blobs(opts);

    EvalContext ctx;
    ctx.data = &data;
    ctx.train.epochs = 1;

    Rng rng(3);
    for (int i = 0; i < 5; ++i) {
        const FitnessRecord rec = evaluate(ctx, random_permutation(2, rng));
        CHECK(rec.combined == combined_score(rec.train_acc, rec.test_acc));
        CHECK(rec.train_acc >= 0.0);
        CHECK(rec.train_acc <= 100.0);
        CHECK(rec.test_acc >= 0.0);
        CHECK(rec.test_acc <= 100.0);
    }
}
