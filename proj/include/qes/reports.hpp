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
 * Study outputs: records.csv (one row per fitness evaluation), report.json
 * (summary + config echo + full records), histogram.csv (combined score
 * binned at width 1.0 over [0,100]) and the GA-vs-random comparison table.
 * Wall-time fields come from a monotonic clock and are excluded from any
 * determinism comparison.
 */

#pragma once

#include <string>

#include "qes/search.hpp"
#include "qes/study.hpp"

namespace qes {

/// Header: perm,train_acc,test_acc,combined,noisy,seed,wall_time. The perm
/// field is double-quoted since permutations contain commas.
void write_records_csv(const std::string &path, const SearchReport &report);

/// Fixed 1.0-wide bins spanning [0,100]; every bin is emitted and the
/// counts sum to the record count. Header: bin_lo,bin_hi,count.
void write_histogram_csv(const std::string &path, const SearchReport &report);
std::vector<std::size_t> histogram_counts(const SearchReport &report);

void write_report_json(const std::string &path, const StudyConfig &config,
                       const SearchReport &report);

struct Comparison {
    double rs_mean = 0.0;
    double rs_best = 0.0;
    double ga_best = 0.0;
    double improvement = 0.0; // ga_best - rs_best, full precision
    double ga_time = 0.0;
    double rs_time = 0.0;
    double runtime_delta_pct = 0.0; // positive = GA finished faster
    std::uint64_t ga_budget = 0;
    std::uint64_t rs_budget = 0;
    bool budget_mismatch = false;
};

/// Reads two report.json files (GA first) and computes the comparison.
Comparison compare_report_files(const std::string &ga_path, const std::string &rs_path);

/// Renders the comparison table; improvements shown at one decimal.
std::string format_comparison(const Comparison &cmp);

} // namespace qes
