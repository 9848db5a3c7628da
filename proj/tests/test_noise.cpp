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

#include "oracles.hpp"
#include "qes/errors.hpp"
#include "qes/fitness.hpp"
#include "qes/noise.hpp"

using namespace qes;

namespace {

Dataset toy_dataset() {
    SynthOptions opts;
    opts.n_features = 2;
    opts.n_per_class = 10;
    opts.separation = 8.0;
    opts.seed = 424242;
    return synth_blobs(opts);
}

} // namespace

TEST_CASE("zero-probability noise is exactly the ideal gate") {
    NoiseConfig cfg; // p1 = p2 = 0
    Rng rng(1);
    std::mt19937 gen(2);
    for (int rep = 0; rep < 10; ++rep) {
        const StateVector state = oracles::random_state(3, gen);
        StateVector noisy = state;
        StateVector ideal = state;
        const GateOp gate = rep % 2 == 0 ? GateOp::rot(rep % 3, 0.3, 0.7, 1.1)
                                         : GateOp::cnot(rep % 3, (rep + 1) % 3);
        apply_noisy_gate(noisy, gate, cfg, rng);
        apply_gate_inplace(ideal, gate);
        for (std::size_t i = 0; i < state.size(); ++i) {
            CHECK(noisy[i] == ideal[i]); // bit-exact
        }
    }
}

TEST_CASE("p1=1 inserts X, Y or Z with equal frequency") {
    NoiseConfig cfg;
    cfg.p1 = 1.0;
    Rng rng(99);

    int counts[3] = {0, 0, 0};
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        StateVector state(1); // |0>
        apply_noisy_gate(state, GateOp::rx(0, 0.0), cfg, rng);
        // X|0> = |1>; Y|0> = i|1>; Z|0> = |0>.
        if (std::abs(state[1] - Complex{1.0, 0.0}) < 1e-12) {
            ++counts[0];
        } else if (std::abs(state[1] - Complex{0.0, 1.0}) < 1e-12) {
            ++counts[1];
        } else if (std::abs(state[0] - Complex{1.0, 0.0}) < 1e-12) {
            ++counts[2];
        } else {
            FAIL("unexpected post-noise state");
        }
    }
    for (int c : counts) {
        const double freq = static_cast<double>(c) / trials;
        CHECK(freq > 1.0 / 3.0 - 0.03);
        CHECK(freq < 1.0 / 3.0 + 0.03);
    }
}

TEST_CASE("noisy gates preserve the norm") {
    NoiseConfig cfg;
    cfg.p1 = 0.5;
    cfg.p2 = 0.5;
    Rng rng(3);
    std::mt19937 gen(4);
    StateVector state = oracles::random_state(3, gen);
    for (int g = 0; g < 100; ++g) {
        apply_noisy_gate(state, GateOp::rot(g % 3, 0.2, 0.4, 0.6), cfg, rng);
        apply_noisy_gate(state, GateOp::cnot(g % 3, (g + 1) % 3), cfg, rng);
    }
    CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("noise config validation") {
    NoiseConfig bad;
    bad.p1 = 1.5;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad.p1 = 0.1;
    bad.num_runs = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad.num_runs = 1;
    CHECK_NOTHROW(bad.validate());
}

TEST_CASE("readout flip flips labels at the configured rate") {
    NoiseConfig cfg;
    cfg.readout_flip = 0.25;
    Rng rng(8);
    NoiseCtx ctx{&cfg, &rng};
    int flips = 0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        if (ctx.maybe_flip_label(0) == 1) {
            ++flips;
        }
    }
    const double freq = static_cast<double>(flips) / trials;
    CHECK(freq > 0.22);
    CHECK(freq < 0.28);
}

TEST_CASE("single noiseless run reduces to the noiseless record") {
    const Dataset data = toy_dataset();
    EvalContext noiseless;
    noiseless.data = &data;
    noiseless.train.epochs = 3;
    noiseless.train.seed = 5;

    EvalContext off = noiseless;
    NoiseConfig cfg;
    cfg.num_runs = 1;
    cfg.seed = 77; // consumed by nothing at zero probabilities
    off.noise = cfg;

    const Permutation perm = Permutation::identity(1);
    const FitnessRecord a = evaluate(noiseless, perm);
    const FitnessRecord b = evaluate(off, perm);
    CHECK(a.train_acc == b.train_acc);
    CHECK(a.test_acc == b.test_acc);
    CHECK(a.combined == b.combined);
    CHECK_FALSE(a.noisy);
    CHECK(b.noisy);
}

TEST_CASE("noisy fitness is deterministic for fixed seeds") {
    const Dataset data = toy_dataset();
    EvalContext ctx;
    ctx.data = &data;
    ctx.train.epochs = 2;
    ctx.train.seed = 5;
    NoiseConfig cfg;
    cfg.p1 = 0.02;
    cfg.p2 = 0.02;
    cfg.num_runs = 4;
    cfg.seed = 31337;
    ctx.noise = cfg;

    const Permutation perm = Permutation::identity(1);
    const FitnessRecord a = evaluate(ctx, perm);
    const FitnessRecord b = evaluate(ctx, perm);
    CHECK(a.train_acc == b.train_acc);
    CHECK(a.test_acc == b.test_acc);
    CHECK(a.combined == b.combined);
    CHECK(a.seed == cfg.seed);
}

TEST_CASE("moderate noise degrades the toy-task combined score") {
    const Dataset data = toy_dataset();
    EvalContext clean;
    clean.data = &data;
    clean.train.epochs = 10;
    clean.train.learning_rate = 0.1;

    int degraded = 0;
    for (int rep = 0; rep < 5; ++rep) {
        clean.train.seed = 100 + static_cast<std::uint64_t>(rep);
        EvalContext noisy = clean;
        NoiseConfig cfg;
        cfg.p1 = 0.01;
        cfg.p2 = 0.01;
        cfg.num_runs = 5;
        cfg.seed = 900 + static_cast<std::uint64_t>(rep);
        noisy.noise = cfg;

        const Permutation perm = Permutation::identity(1);
        if (evaluate(noisy, perm).combined < evaluate(clean, perm).combined) {
            ++degraded;
        }
    }
    CHECK(degraded >= 3); // paired majority over 5 repetitions
}

TEST_CASE("averaged accuracy is non-increasing in p1 on the toy task") {
    // Statistical property: each point averages num_runs trajectories, so
    // we allow a 2.0-point slack for Monte Carlo error (roughly two
    // standard errors of the 10-run mean at these sizes).
    const Dataset data = toy_dataset();
    EvalContext ctx;
    ctx.data = &data;
    ctx.train.epochs = 4;
    ctx.train.learning_rate = 0.05;
    ctx.train.seed = 11;

    const Permutation perm = Permutation::identity(1);
    double previous = 1e9;
    for (const double p : {0.0, 0.005, 0.01, 0.02}) {
        NoiseConfig cfg;
        cfg.p1 = p;
        cfg.num_runs = 10;
        cfg.seed = 1000;
        ctx.noise = cfg;
        const double combined = evaluate(ctx, perm).combined;
        CHECK(combined <= previous + 2.0);
        previous = combined;
    }
}
