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
 * Binary-labeled feature datasets: CSV ingestion, synthetic Gaussian blobs,
 * PCA reduction, silhouette coefficient, deterministic stratified splits and
 * the train-split min-max scaling into [-pi, pi] that the angle embedding
 * consumes.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qes {

/// Row-major dense matrix of doubles.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double &at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    std::span<double> row(std::size_t r) { return {data.data() + r * cols, cols}; }
    std::span<const double> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

    bool operator==(const Matrix &) const = default;
};

/// Per-feature affine map onto [-pi, pi], fitted on the training split only
/// and applied identically (with clipping) everywhere else.
struct FeatureScaler {
    std::vector<double> lo, hi; // per-feature min/max seen at fit time

    static FeatureScaler fit(const Matrix &features, std::span<const std::size_t> rows);
    double transform_value(double v, std::size_t col) const;
    Matrix transform(const Matrix &features) const;

    bool operator==(const FeatureScaler &) const = default;
};

struct Dataset {
    std::string name;
    Matrix features;          // raw values as loaded/generated
    std::vector<int> labels;  // exactly {0, 1}
    std::pair<double, double> label_values{0, 1}; // raw label values mapped to 0/1
    std::vector<std::size_t> train_indices;
    std::vector<std::size_t> test_indices;
    FeatureScaler scaler;     // fitted on train_indices
    Matrix scaled;            // scaler applied to every row

    std::size_t num_samples() const { return features.rows; }
    std::size_t num_features() const { return features.cols; }
    int num_qubits() const { return static_cast<int>(features.cols / 2); }
};

/// Assembles a Dataset from raw parts: validates the two-class contract,
/// performs the seeded stratified split (train fraction clamped so both
/// sides of every class are nonempty) and fits the scaler.
Dataset make_dataset(std::string name, Matrix features, std::vector<int> labels,
                     double split_ratio, std::uint64_t seed,
                     std::pair<double, double> label_values = {0, 1});

struct CsvOptions {
    std::string label_column = "label"; // header name, or column index as text
    bool has_header = true;
    int num_features = -1; // -1 = infer from the file
    double split_ratio = 0.8;
    std::uint64_t seed = 0;
    std::string name; // defaults to the path
};

/// Loads a CSV of numeric features plus one label column holding exactly two
/// distinct values (mapped to 0/1, smaller value first). Rows with
/// non-finite entries, wrong arity or unparseable fields raise ParseError
/// with the 1-based line number.
Dataset load_csv(const std::string &path, const CsvOptions &opts);

/// Same parser on an already-open stream (used by tests and pipes).
Dataset load_csv_stream(std::istream &in, const CsvOptions &opts);

/// Writes a dataset back out in the ingestible schema: header
/// "label,f0,...,f{k-1}", raw (unscaled) feature values.
void write_csv(const Dataset &dataset, const std::string &path);

struct SynthOptions {
    int n_features = 6; // must be even
    int n_per_class = 200;
    double separation = 4.0; // centroid distance
    std::uint64_t seed = 0;
    /// When set, the centroid offset lives entirely in features 0 and 1 and
    /// every other feature is identically distributed noise for both
    /// classes, so the informative feature pair is known by construction.
    bool planted = false;
    double split_ratio = 0.8;
};

/// Two isotropic unit-variance Gaussian clusters whose centroids are
/// `separation` apart along a seeded random direction.
Dataset synth_blobs(const SynthOptions &opts);

/// Centers columns and projects onto the top-k covariance eigenvectors
/// (eigenvalues descending; each eigenvector's largest-magnitude component
/// made positive). k must satisfy 1 <= k <= min(rows, cols).
Matrix pca_reduce(const Matrix &features, std::size_t k);

/// Mean silhouette value over all samples for a two-class labeling,
/// Euclidean metric: s = (b - a) / max(a, b) with a the mean intra-class
/// distance (self excluded) and b the mean distance to the other class.
/// Requires at least 2 samples per class.
double silhouette(const Matrix &features, const std::vector<int> &labels);

} // namespace qes
