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

#include "qes/reports.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "qes/errors.hpp"

namespace qes {

namespace {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::ofstream open_out(const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write output file: " + path);
    }
    return out;
}

json record_to_json(const FitnessRecord &rec) {
    return json{{"perm", rec.perm.to_string()}, {"train_acc", rec.train_acc},
                {"test_acc", rec.test_acc},     {"combined", rec.combined},
                {"noisy", rec.noisy},           {"seed", rec.seed},
                {"wall_time", rec.wall_time}};
}

} // namespace

void write_records_csv(const std::string &path, const SearchReport &report) {
    std::ofstream out = open_out(path);
    out << "perm,train_acc,test_acc,combined,noisy,seed,wall_time\n";
    for (const FitnessRecord &rec : report.records) {
        out << '"' << rec.perm.to_string() << "\"," << format_double(rec.train_acc) << ','
            << format_double(rec.test_acc) << ',' << format_double(rec.combined) << ','
            << (rec.noisy ? "true" : "false") << ',' << rec.seed << ','
            << format_double(rec.wall_time) << "\n";
    }
}

std::vector<std::size_t> histogram_counts(const SearchReport &report) {
    std::vector<std::size_t> counts(100, 0);
    for (const FitnessRecord &rec : report.records) {
        const double clamped = std::clamp(rec.combined, 0.0, 100.0);
        auto bin = static_cast<std::size_t>(clamped); // width 1.0
        if (bin >= counts.size()) {
            bin = counts.size() - 1; // combined == 100 lands in [99,100]
        }
        ++counts[bin];
    }
    return counts;
}

void write_histogram_csv(const std::string &path, const SearchReport &report) {
    const std::vector<std::size_t> counts = histogram_counts(report);
    std::ofstream out = open_out(path);
    out << "bin_lo,bin_hi,count\n";
    for (std::size_t b = 0; b < counts.size(); ++b) {
        out << b << ',' << b + 1 << ',' << counts[b] << "\n";
    }
}

void write_report_json(const std::string &path, const StudyConfig &config,
                       const SearchReport &report) {
    json j;
    j["strategy"] = strategy_name(report.strategy);
    j["n_qubits"] = config.n_qubits;
    j["budget"] = report.budget;
    j["evaluations"] = report.evaluations;
    j["unique_permutations"] = report.unique_permutations;
    j["total_time"] = report.total_time;
    j["best"] = record_to_json(report.best);
    j["config"] = config.to_text();
    json records = json::array();
    for (const FitnessRecord &rec : report.records) {
        records.push_back(record_to_json(rec));
    }
    j["records"] = std::move(records);

    std::ofstream out = open_out(path);
    out << j.dump(2) << "\n";
}

Comparison compare_report_files(const std::string &ga_path, const std::string &rs_path) {
    auto load = [](const std::string &path) {
        std::ifstream in(path);
        if (!in) {
            throw ConfigError("cannot open report file: " + path);
        }
        try {
            return json::parse(in);
        } catch (const json::parse_error &e) {
            throw ConfigError("malformed report " + path + ": " + e.what());
        }
    };
    const json ga = load(ga_path);
    const json rs = load(rs_path);

    Comparison cmp;
    cmp.ga_budget = ga.at("budget").get<std::uint64_t>();
    cmp.rs_budget = rs.at("budget").get<std::uint64_t>();
    cmp.budget_mismatch = cmp.ga_budget != cmp.rs_budget;
    cmp.ga_best = ga.at("best").at("combined").get<double>();
    cmp.rs_best = rs.at("best").at("combined").get<double>();
    cmp.improvement = cmp.ga_best - cmp.rs_best;
    cmp.ga_time = ga.at("total_time").get<double>();
    cmp.rs_time = rs.at("total_time").get<double>();
    cmp.runtime_delta_pct =
        cmp.rs_time > 0.0 ? 100.0 * (cmp.rs_time - cmp.ga_time) / cmp.rs_time : 0.0;

    double sum = 0.0;
    std::size_t count = 0;
    for (const json &rec : rs.at("records")) {
        sum += rec.at("combined").get<double>();
        ++count;
    }
    cmp.rs_mean = count > 0 ? sum / static_cast<double>(count) : 0.0;
    return cmp;
}

std::string format_comparison(const Comparison &cmp) {
    std::ostringstream out;
    out << std::fixed;
    if (cmp.budget_mismatch) {
        out << "WARNING: budget mismatch (ga=" << cmp.ga_budget << ", random=" << cmp.rs_budget
            << "); comparison is not like-for-like\n";
    }
    out << std::setprecision(2);
    out << "rs_mean      " << cmp.rs_mean << "\n";
    out << "rs_best      " << cmp.rs_best << "\n";
    out << "ga_best      " << cmp.ga_best << "\n";
    out << std::setprecision(1);
    out << "improvement  " << cmp.improvement << "\n";
    out << std::setprecision(2);
    out << "ga_runtime_s " << cmp.ga_time << "\n";
    out << "rs_runtime_s " << cmp.rs_time << "\n";
    out << std::setprecision(1);
    out << "runtime_delta_pct " << cmp.runtime_delta_pct << "\n";
    return out.str();
}

} // namespace qes
