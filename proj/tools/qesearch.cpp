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

// qesearch: search for the optimal feature-to-qubit assignment of an
// angle-embedded quantum classifier. Subcommands run the exhaustive sweep,
// the random-selection baseline, the genetic algorithm, dataset generation
// and GA-vs-random comparison.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "qes/dataset.hpp"
#include "qes/errors.hpp"
#include "qes/reports.hpp"
#include "qes/search.hpp"
#include "qes/study.hpp"

namespace fs = std::filesystem;

namespace {

struct SearchArgs {
    std::string config_path;
    std::string out_dir;
    int threads = 0;
};

void add_search_options(CLI::App *cmd, SearchArgs &args) {
    cmd->add_option("--config", args.config_path, "study config file")->required();
    cmd->add_option("--out", args.out_dir, "output directory")->required();
    cmd->add_option("--threads", args.threads, "worker threads (0 = hardware)");
}

void run_search(qes::Strategy strategy, const SearchArgs &args) {
    qes::StudyConfig cfg = qes::StudyConfig::from_file(args.config_path);
    cfg.strategy = strategy; // the subcommand decides the strategy
    cfg.validate();

    const qes::StudyResult result = qes::run_study(cfg, args.threads);

    fs::create_directories(args.out_dir);
    const fs::path out(args.out_dir);
    qes::write_records_csv((out / "records.csv").string(), result.report);
    qes::write_report_json((out / "report.json").string(), result.config, result.report);
    qes::write_histogram_csv((out / "histogram.csv").string(), result.report);

    std::cout << qes::strategy_name(strategy) << ": best " << result.report.best.perm.to_string()
              << " combined " << result.report.best.combined << " (train "
              << result.report.best.train_acc << ", test " << result.report.best.test_acc
              << ")\nevaluations " << result.report.evaluations << " of budget "
              << result.report.budget << ", unique " << result.report.unique_permutations
              << ", total " << result.report.total_time << " s\n";
}

void run_synth(const SearchArgs &args) {
    const qes::StudyConfig cfg = qes::StudyConfig::from_file(args.config_path);
    const qes::Dataset data = qes::build_dataset(cfg);

    fs::create_directories(args.out_dir);
    const fs::path out(args.out_dir);
    qes::write_csv(data, (out / "dataset.csv").string());

    std::cout << "dataset " << data.name << ": " << data.num_samples() << " samples, "
              << data.num_features() << " features, silhouette "
              << qes::silhouette(data.features, data.labels) << "\n";
}

int dispatch(int argc, char **argv) {
    CLI::App app{"optimal quantum-embedding permutation search"};
    app.require_subcommand(1);

    SearchArgs sweep_args;
    SearchArgs random_args;
    SearchArgs ga_args;
    SearchArgs synth_args;
    add_search_options(app.add_subcommand("sweep", "evaluate every permutation"), sweep_args);
    add_search_options(app.add_subcommand("random", "random-selection baseline"), random_args);
    add_search_options(app.add_subcommand("ga", "genetic-algorithm search"), ga_args);

    CLI::App *synth = app.add_subcommand("synth", "generate a dataset CSV");
    synth->add_option("--config", synth_args.config_path, "study config file")->required();
    synth->add_option("--out", synth_args.out_dir, "output directory")->required();

    std::string ga_report;
    std::string rs_report;
    std::string compare_out;
    CLI::App *compare = app.add_subcommand("compare", "compare a GA report with a random report");
    compare->add_option("ga_report", ga_report, "GA report.json")->required();
    compare->add_option("random_report", rs_report, "random-selection report.json")->required();
    compare->add_option("--out", compare_out, "directory for compare.txt");

    CLI11_PARSE(app, argc, argv);

    if (app.got_subcommand("sweep")) {
        run_search(qes::Strategy::Sweep, sweep_args);
    } else if (app.got_subcommand("random")) {
        run_search(qes::Strategy::Random, random_args);
    } else if (app.got_subcommand("ga")) {
        run_search(qes::Strategy::Ga, ga_args);
    } else if (app.got_subcommand("synth")) {
        run_synth(synth_args);
    } else if (app.got_subcommand("compare")) {
        const qes::Comparison cmp = qes::compare_report_files(ga_report, rs_report);
        const std::string table = qes::format_comparison(cmp);
        std::cout << table;
        if (!compare_out.empty()) {
            fs::create_directories(compare_out);
            std::ofstream out(fs::path(compare_out) / "compare.txt");
            if (!out) {
                throw qes::ConfigError("cannot write compare.txt under " + compare_out);
            }
            out << table;
        }
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return dispatch(argc, argv);
    } catch (const qes::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const qes::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const qes::UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const qes::TrainingError &e) {
        std::cerr << "training error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
