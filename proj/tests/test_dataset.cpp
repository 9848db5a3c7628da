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

#include <cmath>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "qes/dataset.hpp"
#include "qes/errors.hpp"

using namespace qes;

namespace {
constexpr double kPi = 3.14159265358979323846;

Dataset from_text(const std::string &text, CsvOptions opts = {}) {
    std::istringstream in(text);
    return load_csv_stream(in, opts);
}
} // namespace

TEST_CASE("csv loading with stratified split") {
    const std::string csv = "label,f0,f1\n"
                            "0,1.0,2.0\n"
                            "0,1.5,2.5\n"
                            "1,5.0,6.0\n"
                            "1,5.5,6.5\n";
    CsvOptions opts;
    opts.split_ratio = 0.5;
    const Dataset d = from_text(csv, opts);
    CHECK(d.num_samples() == 4);
    CHECK(d.num_features() == 2);
    CHECK(d.train_indices.size() == 2);
    CHECK(d.test_indices.size() == 2);

    // One sample of each class on each side.
    auto labels_of = [&](const std::vector<std::size_t> &idx) {
        return d.labels[idx[0]] + d.labels[idx[1]];
    };
    CHECK(labels_of(d.train_indices) == 1);
    CHECK(labels_of(d.test_indices) == 1);
}

TEST_CASE("csv split is deterministic per seed") {
    const std::string csv = [] {
        std::ostringstream out;
        out << "label,f0,f1\n";
        for (int i = 0; i < 30; ++i) {
            out << i % 2 << ',' << i << ',' << 2 * i << "\n";
        }
        return out.str();
    }();
    CsvOptions opts;
    opts.seed = 9;
    const Dataset a = from_text(csv, opts);
    const Dataset b = from_text(csv, opts);
    CHECK(a.train_indices == b.train_indices);
    CHECK(a.test_indices == b.test_indices);

    opts.seed = 10;
    const Dataset c = from_text(csv, opts);
    CHECK(a.train_indices != c.train_indices);
}

TEST_CASE("csv error paths carry line numbers") {
    CHECK_THROWS_WITH_AS(from_text("label,f0,f1\n0,1.0,nan\n0,1,2\n1,3,4\n1,5,6\n"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(from_text("label,f0,f1\n0,1.0\n"), doctest::Contains("line 2"),
                         ParseError);
    CHECK_THROWS_WITH_AS(from_text("label,f0,f1\n0,1.0,2.0\n1,y,4\n"),
                         doctest::Contains("line 3"), ParseError);

    // Single class.
    CHECK_THROWS_AS(from_text("label,f0,f1\n0,1,2\n0,3,4\n"), ConfigError);
    // A class with one sample.
    CHECK_THROWS_AS(from_text("label,f0,f1\n0,1,2\n0,3,4\n1,5,6\n"), ConfigError);
    // Odd feature count.
    CHECK_THROWS_AS(from_text("label,f0\n0,1\n0,2\n1,3\n1,4\n"), ConfigError);
    // Missing label column.
    CsvOptions opts;
    opts.label_column = "target";
    CHECK_THROWS_AS(from_text("label,f0,f1\n0,1,2\n1,3,4\n", opts), ConfigError);
}

TEST_CASE("label values map to 0/1 by magnitude") {
    const Dataset d = from_text("label,f0,f1\n6,1,2\n2,3,4\n6,5,6\n2,7,8\n");
    CHECK(d.label_values.first == 2.0);
    CHECK(d.label_values.second == 6.0);
    CHECK(d.labels == std::vector<int>{1, 0, 1, 0});
}

TEST_CASE("label column by index without header") {
    CsvOptions opts;
    opts.has_header = false;
    opts.label_column = "0";
    const Dataset d = from_text("1,0.5,0.6\n0,0.7,0.8\n1,0.9,1.0\n0,1.1,1.2\n", opts);
    CHECK(d.num_features() == 2);
    CHECK(d.labels == std::vector<int>{1, 0, 1, 0});
}

TEST_CASE("csv round-trips through write_csv") {
    oracles::TempDir tmp("qes-csv");
    SynthOptions opts;
    opts.n_features = 4;
    opts.n_per_class = 10;
    opts.seed = 3;
    const Dataset d = synth_blobs(opts);
    write_csv(d, tmp.file("out.csv"));

    CsvOptions in_opts;
    in_opts.seed = opts.seed;
    const Dataset back = load_csv(tmp.file("out.csv"), in_opts);
    CHECK(back.num_samples() == d.num_samples());
    CHECK(back.labels == d.labels);
    CHECK(back.train_indices == d.train_indices);
    for (std::size_t i = 0; i < d.features.data.size(); ++i) {
        CHECK(back.features.data[i] == doctest::Approx(d.features.data[i]).epsilon(1e-15));
    }
}

TEST_CASE("scaler maps the train split into [-pi, pi] and clips the rest") {
    const std::string csv = "label,f0,f1\n"
                            "0,0.0,10\n"
                            "0,1.0,20\n"
                            "0,2.0,30\n"
                            "1,3.0,40\n"
                            "1,4.0,50\n"
                            "1,5.0,60\n";
    CsvOptions opts;
    opts.split_ratio = 0.67;
    const Dataset d = from_text(csv, opts);
    for (std::size_t r = 0; r < d.num_samples(); ++r) {
        for (std::size_t c = 0; c < d.num_features(); ++c) {
            CHECK(d.scaled.at(r, c) >= -kPi);
            CHECK(d.scaled.at(r, c) <= kPi);
        }
    }
    // Train minimum and maximum hit the interval ends exactly.
    double lo = 1e9;
    double hi = -1e9;
    for (std::size_t r : d.train_indices) {
        lo = std::min(lo, d.scaled.at(r, 0));
        hi = std::max(hi, d.scaled.at(r, 0));
    }
    CHECK(lo == -kPi);
    CHECK(hi == kPi);
}

TEST_CASE("synthetic blobs: silhouette tracks separation") {
    SynthOptions near;
    near.n_features = 6;
    near.n_per_class = 100;
    near.separation = 0.0;
    near.seed = 11;
    const Dataset overlapping = synth_blobs(near);
    CHECK(std::abs(silhouette(overlapping.features, overlapping.labels)) < 0.1);

    SynthOptions far = near;
    far.separation = 10.0;
    const Dataset separated = synth_blobs(far);
    CHECK(silhouette(separated.features, separated.labels) > 0.6);
}

TEST_CASE("planted blobs carry all signal in the first feature pair") {
    SynthOptions opts;
    opts.n_features = 6;
    opts.n_per_class = 400;
    opts.separation = 6.0;
    opts.seed = 21;
    opts.planted = true;
    const Dataset d = synth_blobs(opts);

    for (std::size_t c = 0; c < 6; ++c) {
        double mean0 = 0.0;
        double mean1 = 0.0;
        for (std::size_t r = 0; r < d.num_samples(); ++r) {
            (d.labels[r] == 0 ? mean0 : mean1) += d.features.at(r, c);
        }
        mean0 /= 400.0;
        mean1 /= 400.0;
        const double gap = std::abs(mean0 - mean1);
        if (c >= 2) {
            CHECK(gap < 0.5); // noise features: no class signal
        }
    }
    double g0 = 0.0;
    double g1 = 0.0;
    for (std::size_t r = 0; r < d.num_samples(); ++r) {
        const double sign = d.labels[r] == 0 ? -1.0 : 1.0;
        g0 += sign * d.features.at(r, 0);
        g1 += sign * d.features.at(r, 1);
    }
    g0 /= 400.0;
    g1 /= 400.0;
    CHECK(std::hypot(g0, g1) > 4.0); // centroid gap close to the requested 6
}

TEST_CASE("pca keeps decorrelated data fixed up to order and sign") {
    Matrix x(4, 2);
    const double col0[] = {3, -3, 3, -3};
    const double col1[] = {1, 1, -1, -1};
    for (std::size_t r = 0; r < 4; ++r) {
        x.at(r, 0) = col0[r];
        x.at(r, 1) = col1[r];
    }
    const Matrix y = pca_reduce(x, 2);
    for (std::size_t r = 0; r < 4; ++r) {
        CHECK(y.at(r, 0) == doctest::Approx(col0[r]).epsilon(1e-9));
        CHECK(y.at(r, 1) == doctest::Approx(col1[r]).epsilon(1e-9));
    }
}

TEST_CASE("pca on rank-1 data preserves pairwise distances exactly") {
    std::mt19937 gen(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const std::size_t rows = 12;
    Matrix x(rows, 5);
    std::vector<double> dir{0.3, -1.2, 0.5, 2.0, -0.7};
    for (std::size_t r = 0; r < rows; ++r) {
        const double t = u(gen);
        for (std::size_t c = 0; c < 5; ++c) {
            x.at(r, c) = t * dir[c];
        }
    }
    const Matrix y = pca_reduce(x, 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = i + 1; j < rows; ++j) {
            double orig = 0.0;
            for (std::size_t c = 0; c < 5; ++c) {
                const double d = x.at(i, c) - x.at(j, c);
                orig += d * d;
            }
            const double dy = y.at(i, 0) - y.at(j, 0);
            CHECK(std::sqrt(orig) == doctest::Approx(std::abs(dy)).epsilon(1e-8));
        }
    }
}

TEST_CASE("full-rank pca preserves total variance") {
    std::mt19937 gen(6);
    std::normal_distribution<double> normal(0.0, 2.0);
    Matrix x(40, 4);
    for (double &v : x.data) {
        v = normal(gen);
    }
    const Matrix y = pca_reduce(x, 4);

    auto total_variance = [](const Matrix &m) {
        double total = 0.0;
        for (std::size_t c = 0; c < m.cols; ++c) {
            double mean = 0.0;
            for (std::size_t r = 0; r < m.rows; ++r) {
                mean += m.at(r, c);
            }
            mean /= static_cast<double>(m.rows);
            for (std::size_t r = 0; r < m.rows; ++r) {
                const double d = m.at(r, c) - mean;
                total += d * d;
            }
        }
        return total / static_cast<double>(m.rows - 1);
    };
    CHECK(total_variance(x) == doctest::Approx(total_variance(y)).epsilon(1e-8));
}

TEST_CASE("pca projection never stretches pairwise distances") {
    std::mt19937 gen(7);
    std::normal_distribution<double> normal(0.0, 1.5);
    Matrix x(25, 6);
    for (double &v : x.data) {
        v = normal(gen);
    }
    const Matrix y = pca_reduce(x, 3);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t j = i + 1; j < x.rows; ++j) {
            double orig = 0.0;
            double proj = 0.0;
            for (std::size_t c = 0; c < x.cols; ++c) {
                const double d = x.at(i, c) - x.at(j, c);
                orig += d * d;
            }
            for (std::size_t c = 0; c < y.cols; ++c) {
                const double d = y.at(i, c) - y.at(j, c);
                proj += d * d;
            }
            CHECK(std::sqrt(proj) <= std::sqrt(orig) + 1e-9);
        }
    }
    CHECK_THROWS_AS(pca_reduce(x, 7), UsageError);
    CHECK_THROWS_AS(pca_reduce(x, 0), UsageError);
}

TEST_CASE("silhouette on hand-built clusters") {
    Matrix tight(4, 2);
    tight.at(0, 0) = 0.0;
    tight.at(0, 1) = 0.0;
    tight.at(1, 0) = 0.0;
    tight.at(1, 1) = 0.1;
    tight.at(2, 0) = 10.0;
    tight.at(2, 1) = 10.0;
    tight.at(3, 0) = 10.0;
    tight.at(3, 1) = 10.1;
    CHECK(silhouette(tight, {0, 0, 1, 1}) > 0.98);

    // Both classes drawn from the identical point set: no separation.
    Matrix overlap(6, 2);
    const double pts[3][2] = {{0, 0}, {1, 0}, {0, 1}};
    for (int copy = 0; copy < 2; ++copy) {
        for (int p = 0; p < 3; ++p) {
            overlap.at(static_cast<std::size_t>(copy * 3 + p), 0) = pts[p][0];
            overlap.at(static_cast<std::size_t>(copy * 3 + p), 1) = pts[p][1];
        }
    }
    CHECK(silhouette(overlap, {0, 0, 0, 1, 1, 1}) <= 0.0);

    CHECK_THROWS_AS(silhouette(tight, {0, 1, 1, 1}), UsageError);
}

TEST_CASE("silhouette matches the independent reference on random data") {
    std::mt19937 gen(2026);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 8 + static_cast<std::size_t>(gen() % 20);
        Matrix x(n, 3);
        for (double &v : x.data) {
            v = normal(gen);
        }
        std::vector<int> labels(n);
        labels[0] = 0;
        labels[1] = 0;
        labels[2] = 1;
        labels[3] = 1;
        for (std::size_t i = 4; i < n; ++i) {
            labels[i] = coin(gen);
        }
        const double got = silhouette(x, labels);
        const double expected = oracles::silhouette_reference(x, labels);
        CHECK(got == expected); // identical formula, independent code
        CHECK(got >= -1.0);
        CHECK(got <= 1.0);
    }
}
