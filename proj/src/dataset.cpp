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

#include "qes/dataset.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "qes/errors.hpp"
#include "qes/rng.hpp"

namespace qes {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<std::string> split_fields(const std::string &line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    // Trailing comma means a trailing empty field.
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

std::string trim(const std::string &s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return s.substr(b, e - b);
}

double parse_double(const std::string &raw, std::size_t line_no) {
    const std::string s = trim(raw);
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception &) {
        throw ParseError("cannot parse numeric field '" + s + "'", line_no);
    }
}

} // namespace

FeatureScaler FeatureScaler::fit(const Matrix &features, std::span<const std::size_t> rows) {
    if (rows.empty()) {
        throw UsageError("scaler fit needs at least one row");
    }
    FeatureScaler s;
    s.lo.assign(features.cols, std::numeric_limits<double>::infinity());
    s.hi.assign(features.cols, -std::numeric_limits<double>::infinity());
    for (std::size_t r : rows) {
        for (std::size_t c = 0; c < features.cols; ++c) {
            s.lo[c] = std::min(s.lo[c], features.at(r, c));
            s.hi[c] = std::max(s.hi[c], features.at(r, c));
        }
    }
    return s;
}

double FeatureScaler::transform_value(double v, std::size_t col) const {
    const double lo_c = lo[col];
    const double hi_c = hi[col];
    if (hi_c <= lo_c) {
        return 0.0; // constant feature on the train split
    }
    const double t = (v - lo_c) / (hi_c - lo_c);
    const double angle = -kPi + 2.0 * kPi * t;
    return std::clamp(angle, -kPi, kPi);
}

Matrix FeatureScaler::transform(const Matrix &features) const {
    Matrix out(features.rows, features.cols);
    for (std::size_t r = 0; r < features.rows; ++r) {
        for (std::size_t c = 0; c < features.cols; ++c) {
            out.at(r, c) = transform_value(features.at(r, c), c);
        }
    }
    return out;
}

Dataset make_dataset(std::string name, Matrix features, std::vector<int> labels,
                     double split_ratio, std::uint64_t seed,
                     std::pair<double, double> label_values) {
    if (features.rows != labels.size()) {
        throw ConfigError("dataset has " + std::to_string(features.rows) + " rows but " +
                          std::to_string(labels.size()) + " labels");
    }
    if (features.cols == 0 || features.cols % 2 != 0) {
        throw ConfigError("feature count must be even and positive, got " +
                          std::to_string(features.cols));
    }
    if (!(split_ratio > 0.0 && split_ratio < 1.0)) {
        throw ConfigError("split ratio must be in (0,1)");
    }
    std::vector<std::size_t> by_class[2];
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != 0 && labels[i] != 1) {
            throw ConfigError("labels must be 0 or 1 after mapping");
        }
        by_class[labels[i]].push_back(i);
    }
    if (by_class[0].empty() || by_class[1].empty()) {
        throw ConfigError("dataset must contain exactly two classes");
    }
    for (int c = 0; c < 2; ++c) {
        if (by_class[c].size() < 2) {
            throw ConfigError("class " + std::to_string(c) + " has fewer than 2 samples");
        }
    }

    Dataset d;
    d.name = std::move(name);
    d.features = std::move(features);
    d.labels = std::move(labels);
    d.label_values = label_values;

    // Stratified split: shuffle within each class, clamp the train count so
    // neither side of either class is empty.
    for (int c = 0; c < 2; ++c) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(c) + 1));
        std::vector<std::size_t> idx = by_class[c];
        rng.shuffle(idx);
        const auto n_c = idx.size();
        auto n_train = static_cast<std::size_t>(std::lround(split_ratio * static_cast<double>(n_c)));
        n_train = std::clamp<std::size_t>(n_train, 1, n_c - 1);
        d.train_indices.insert(d.train_indices.end(), idx.begin(), idx.begin() + n_train);
        d.test_indices.insert(d.test_indices.end(), idx.begin() + n_train, idx.end());
    }
    std::sort(d.train_indices.begin(), d.train_indices.end());
    std::sort(d.test_indices.begin(), d.test_indices.end());

    d.scaler = FeatureScaler::fit(d.features, d.train_indices);
    d.scaled = d.scaler.transform(d.features);
    return d;
}

Dataset load_csv_stream(std::istream &in, const CsvOptions &opts) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    long label_idx = -1;

    if (opts.has_header) {
        if (!std::getline(in, line)) {
            throw ParseError("empty input", 1);
        }
        ++line_no;
        header = split_fields(line);
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (trim(header[i]) == opts.label_column) {
                label_idx = static_cast<long>(i);
                break;
            }
        }
    }
    if (label_idx < 0) {
        // Fall back to interpreting the label column as an index.
        try {
            std::size_t pos = 0;
            label_idx = std::stol(opts.label_column, &pos);
            if (pos != opts.label_column.size()) {
                label_idx = -1;
            }
        } catch (const std::exception &) {
            label_idx = -1;
        }
        if (label_idx < 0) {
            throw ConfigError("label column '" + opts.label_column + "' not found");
        }
    }

    auto check_arity = [&](std::size_t arity, std::size_t at_line) {
        if (arity < 2) {
            throw ParseError("need at least one feature column plus the label", at_line);
        }
        if (static_cast<std::size_t>(label_idx) >= arity) {
            throw ConfigError("label column index " + std::to_string(label_idx) +
                              " out of range for " + std::to_string(arity) + " columns");
        }
    };

    std::vector<std::vector<double>> rows;
    std::vector<double> raw_labels;
    std::size_t arity = opts.has_header ? header.size() : 0;
    if (opts.has_header) {
        check_arity(arity, 1);
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        const std::vector<std::string> fields = split_fields(line);
        if (arity == 0) {
            arity = fields.size();
            check_arity(arity, line_no);
        } else if (fields.size() != arity) {
            throw ParseError("expected " + std::to_string(arity) + " fields, got " +
                                 std::to_string(fields.size()),
                             line_no);
        }
        std::vector<double> row;
        row.reserve(arity - 1);
        double label = 0;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            const double v = parse_double(fields[i], line_no);
            if (!std::isfinite(v)) {
                throw ParseError("non-finite value in field " + std::to_string(i), line_no);
            }
            if (static_cast<long>(i) == label_idx) {
                label = v;
            } else {
                row.push_back(v);
            }
        }
        rows.push_back(std::move(row));
        raw_labels.push_back(label);
    }
    if (rows.empty()) {
        throw ParseError("no data rows", line_no == 0 ? 1 : line_no);
    }

    const std::size_t n_feat = rows[0].size();
    if (opts.num_features >= 0 && n_feat != static_cast<std::size_t>(opts.num_features)) {
        throw ConfigError("expected " + std::to_string(opts.num_features) + " features, file has " +
                          std::to_string(n_feat));
    }

    // Map the two distinct raw label values to 0/1, smaller value first.
    std::set<double> distinct(raw_labels.begin(), raw_labels.end());
    if (distinct.size() != 2) {
        throw ConfigError("need exactly 2 distinct label values, found " +
                          std::to_string(distinct.size()));
    }
    const double lo_label = *distinct.begin();
    const double hi_label = *std::next(distinct.begin());

    Matrix features(rows.size(), n_feat);
    std::vector<int> labels(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::copy(rows[r].begin(), rows[r].end(), features.row(r).begin());
        labels[r] = raw_labels[r] == lo_label ? 0 : 1;
    }
    return make_dataset(opts.name.empty() ? "csv" : opts.name, std::move(features),
                        std::move(labels), opts.split_ratio, opts.seed, {lo_label, hi_label});
}

Dataset load_csv(const std::string &path, const CsvOptions &opts) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open dataset file: " + path);
    }
    CsvOptions named = opts;
    if (named.name.empty()) {
        named.name = path;
    }
    return load_csv_stream(in, named);
}

void write_csv(const Dataset &dataset, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write dataset file: " + path);
    }
    out << "label";
    for (std::size_t c = 0; c < dataset.features.cols; ++c) {
        out << ",f" << c;
    }
    out << "\n";
    out.precision(17);
    for (std::size_t r = 0; r < dataset.features.rows; ++r) {
        out << (dataset.labels[r] == 0 ? dataset.label_values.first : dataset.label_values.second);
        for (std::size_t c = 0; c < dataset.features.cols; ++c) {
            out << ',' << dataset.features.at(r, c);
        }
        out << "\n";
    }
}

Dataset synth_blobs(const SynthOptions &opts) {
    if (opts.n_features < 2 || opts.n_features % 2 != 0) {
        throw ConfigError("synthetic feature count must be even and >= 2");
    }
    if (opts.n_per_class < 2) {
        throw ConfigError("need at least 2 samples per class");
    }
    if (opts.separation < 0.0) {
        throw ConfigError("separation must be >= 0");
    }
    const auto f = static_cast<std::size_t>(opts.n_features);
    Rng rng(derive_seed(opts.seed, 0x5b0b5ULL));

    // Unit direction of the class offset: confined to the first feature pair
    // in planted mode, isotropic otherwise.
    std::vector<double> dir(f, 0.0);
    if (opts.planted) {
        const double phi = rng.uniform(0.0, 2.0 * kPi);
        dir[0] = std::cos(phi);
        dir[1] = std::sin(phi);
    } else {
        double norm_sq = 0.0;
        while (norm_sq < 1e-12) {
            for (auto &v : dir) {
                v = rng.normal();
            }
            norm_sq = 0.0;
            for (double v : dir) {
                norm_sq += v * v;
            }
        }
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (auto &v : dir) {
            v *= inv;
        }
    }

    const auto n = static_cast<std::size_t>(opts.n_per_class);
    Matrix features(2 * n, f);
    std::vector<int> labels(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) {
        const int cls = i < n ? 0 : 1;
        const double side = cls == 0 ? -0.5 : 0.5;
        labels[i] = cls;
        for (std::size_t c = 0; c < f; ++c) {
            features.at(i, c) = side * opts.separation * dir[c] + rng.normal();
        }
    }

    std::ostringstream name;
    name << "synth(f=" << opts.n_features << ",n=" << opts.n_per_class
         << ",sep=" << opts.separation << (opts.planted ? ",planted" : "") << ")";
    return make_dataset(name.str(), std::move(features), std::move(labels), opts.split_ratio,
                        opts.seed);
}

Matrix pca_reduce(const Matrix &features, std::size_t k) {
    if (k < 1 || k > std::min(features.rows, features.cols)) {
        throw UsageError("PCA target dimension " + std::to_string(k) +
                         " out of range for a " + std::to_string(features.rows) + "x" +
                         std::to_string(features.cols) + " matrix");
    }
    Eigen::MatrixXd x(features.rows, features.cols);
    for (std::size_t r = 0; r < features.rows; ++r) {
        for (std::size_t c = 0; c < features.cols; ++c) {
            x(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = features.at(r, c);
        }
    }
    const Eigen::RowVectorXd mean = x.colwise().mean();
    x.rowwise() -= mean;

    const Eigen::MatrixXd cov =
        (x.adjoint() * x) / std::max<double>(1.0, static_cast<double>(features.rows) - 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success) {
        throw UsageError("PCA eigendecomposition failed");
    }

    // Eigen sorts eigenvalues ascending; take the top k in descending order
    // and fix each eigenvector's sign by its largest-magnitude component.
    Eigen::MatrixXd basis(features.cols, k);
    for (std::size_t j = 0; j < k; ++j) {
        Eigen::VectorXd v = solver.eigenvectors().col(
            static_cast<Eigen::Index>(features.cols - 1 - j));
        Eigen::Index arg_max = 0;
        v.cwiseAbs().maxCoeff(&arg_max);
        if (v(arg_max) < 0.0) {
            v = -v;
        }
        basis.col(static_cast<Eigen::Index>(j)) = v;
    }

    const Eigen::MatrixXd projected = x * basis;
    Matrix out(features.rows, k);
    for (std::size_t r = 0; r < features.rows; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            out.at(r, c) = projected(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return out;
}

double silhouette(const Matrix &features, const std::vector<int> &labels) {
    if (features.rows != labels.size()) {
        throw UsageError("silhouette: row/label count mismatch");
    }
    std::size_t count[2] = {0, 0};
    for (int l : labels) {
        if (l != 0 && l != 1) {
            throw UsageError("silhouette expects binary 0/1 labels");
        }
        ++count[l];
    }
    if (count[0] < 2 || count[1] < 2) {
        throw UsageError("silhouette needs at least 2 samples per class");
    }

    const std::size_t n = features.rows;
    auto dist = [&](std::size_t i, std::size_t j) {
        double acc = 0.0;
        for (std::size_t c = 0; c < features.cols; ++c) {
            const double d = features.at(i, c) - features.at(j, c);
            acc += d * d;
        }
        return std::sqrt(acc);
    };

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double same = 0.0;
        double other = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) {
                continue;
            }
            const double d = dist(i, j);
            if (labels[j] == labels[i]) {
                same += d;
            } else {
                other += d;
            }
        }
        const double a = same / static_cast<double>(count[labels[i]] - 1);
        const double b = other / static_cast<double>(count[1 - labels[i]]);
        const double denom = std::max(a, b);
        total += denom > 0.0 ? (b - a) / denom : 0.0;
    }
    return total / static_cast<double>(n);
}

} // namespace qes
