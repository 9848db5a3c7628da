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

#include "qes/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "qes/errors.hpp"
#include "qes/parallel.hpp"

namespace qes {

namespace {

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

// Finalizes the derived report fields from the record log.
void finish_report(SearchReport &report, const Stopwatch &watch) {
    if (report.records.empty()) {
        throw UsageError("search produced no records");
    }
    report.evaluations = report.records.size();
    std::size_t best_idx = 0;
    std::set<std::vector<int>> distinct;
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        distinct.insert(report.records[i].perm.order());
        if (report.records[i].combined > report.records[best_idx].combined) {
            best_idx = i;
        }
    }
    report.best = report.records[best_idx];
    report.unique_permutations = distinct.size();
    report.total_time = watch.seconds();
}

// Evaluates perms[i] for every i in [begin, end) in parallel, appending the
// records in index order. `what` labels errors with strategy context.
void evaluate_range(std::vector<FitnessRecord> &out, std::span<const Permutation> perms,
                    const FitnessFn &fitness, int threads, const std::string &what) {
    std::vector<FitnessRecord> batch(perms.size());
    parallel_for(perms.size(), threads, [&](std::size_t i) {
        try {
            batch[i] = fitness(perms[i]);
        } catch (const TrainingError &e) {
            throw TrainingError(what + ", individual " + std::to_string(i) + ": " + e.what(),
                                e.step_index);
        }
    });
    out.insert(out.end(), std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()));
}

} // namespace

int GaConfig::num_elites() const {
    return static_cast<int>(std::floor(retention_rate * static_cast<double>(s_pop)));
}

void GaConfig::validate() const {
    auto check_rate = [](double r, const char *name) {
        if (!(r >= 0.0 && r <= 1.0)) {
            throw ConfigError(std::string("GA ") + name + " must be in [0,1]");
        }
    };
    check_rate(crossover_rate, "crossover rate");
    check_rate(retention_rate, "retention rate");
    check_rate(mutation_rate, "mutation rate");
    if (s_pop < 2) {
        throw ConfigError("GA population size must be >= 2");
    }
    if (generations < 1) {
        throw ConfigError("GA generations must be >= 1");
    }
    if (tournament_size < 1) {
        throw ConfigError("GA tournament size must be >= 1");
    }
    if (num_elites() >= s_pop) {
        throw ConfigError("GA retention would keep the whole population");
    }
}

const char *strategy_name(Strategy s) {
    switch (s) {
    case Strategy::Sweep:
        return "sweep";
    case Strategy::Random:
        return "random";
    case Strategy::Ga:
        return "ga";
    }
    return "?";
}

Strategy strategy_from_name(const std::string &name) {
    if (name == "sweep") {
        return Strategy::Sweep;
    }
    if (name == "random") {
        return Strategy::Random;
    }
    if (name == "ga") {
        return Strategy::Ga;
    }
    throw ConfigError("unknown strategy: " + name);
}

FitnessFn make_fitness(const EvalContext &ctx) {
    return [ctx](const Permutation &perm) { return evaluate(ctx, perm); };
}

std::size_t tournament_select_index(std::span<const double> scores, int k, Rng &rng) {
    if (scores.empty()) {
        throw UsageError("tournament selection over an empty population");
    }
    if (k < 1) {
        throw UsageError("tournament size must be >= 1");
    }
    const std::size_t n = scores.size();
    std::size_t winner = n; // sentinel
    auto consider = [&](std::size_t candidate) {
        if (winner == n || scores[candidate] > scores[winner] ||
            (scores[candidate] == scores[winner] && candidate < winner)) {
            winner = candidate;
        }
    };
    if (static_cast<std::size_t>(k) > n) {
        for (int i = 0; i < k; ++i) {
            consider(rng.uniform_int(n));
        }
        return winner;
    }
    // Without replacement: partial Fisher-Yates over the index list.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (int i = 0; i < k; ++i) {
        const std::size_t j = i + rng.uniform_int(n - static_cast<std::size_t>(i));
        std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
        consider(idx[static_cast<std::size_t>(i)]);
    }
    return winner;
}

const Permutation &tournament_select(std::span<const Permutation> pop,
                                     std::span<const double> scores, int k, Rng &rng) {
    if (pop.size() != scores.size()) {
        throw UsageError("tournament selection: population/score size mismatch");
    }
    return pop[tournament_select_index(scores, k, rng)];
}

Permutation crossover_at(const Permutation &p1, const Permutation &p2, std::size_t pivot) {
    if (p1.size() != p2.size()) {
        throw UsageError("crossover: parent length mismatch");
    }
    const auto len = static_cast<std::size_t>(p1.size());
    if (pivot >= len) {
        throw UsageError("crossover: pivot out of range");
    }
    std::vector<int> child;
    child.reserve(len);
    std::vector<bool> present(len, false);
    for (std::size_t i = 0; i <= pivot; ++i) {
        child.push_back(p1[static_cast<int>(i)]);
        present[static_cast<std::size_t>(p1[static_cast<int>(i)])] = true;
    }
    for (int i = 0; i < p2.size(); ++i) {
        if (!present[static_cast<std::size_t>(p2[i])]) {
            child.push_back(p2[i]);
        }
    }
    return Permutation(std::move(child));
}

Permutation crossover(const Permutation &p1, const Permutation &p2, Rng &rng) {
    return crossover_at(p1, p2, rng.uniform_int(static_cast<std::uint64_t>(p1.size())));
}

Permutation swap_mutation_at(const Permutation &perm, std::size_t i, std::size_t j) {
    const auto len = static_cast<std::size_t>(perm.size());
    if (len < 2) {
        throw UsageError("mutation needs at least 2 positions");
    }
    if (i >= len || j >= len || i == j) {
        throw UsageError("mutation positions must be distinct and in range");
    }
    std::vector<int> order = perm.order();
    std::swap(order[i], order[j]);
    return Permutation(std::move(order));
}

Permutation mutate(const Permutation &perm, Rng &rng) {
    const auto len = static_cast<std::uint64_t>(perm.size());
    if (len < 2) {
        throw UsageError("mutation needs at least 2 positions");
    }
    const std::uint64_t i = rng.uniform_int(len);
    std::uint64_t j = rng.uniform_int(len - 1);
    if (j >= i) {
        ++j;
    }
    return swap_mutation_at(perm, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

SearchReport sweep_search(int num_qubits, const FitnessFn &fitness, std::uint64_t cap,
                          int threads) {
    const std::uint64_t total = count_permutations(num_qubits);
    if (total > cap) {
        throw ConfigError("sweep over " + std::to_string(total) +
                          " permutations exceeds the cap of " + std::to_string(cap));
    }
    Stopwatch watch;
    std::vector<Permutation> perms;
    perms.reserve(total);
    std::vector<int> order = Permutation::identity(num_qubits).order();
    do {
        perms.emplace_back(order);
    } while (std::next_permutation(order.begin(), order.end()));

    SearchReport report;
    report.strategy = Strategy::Sweep;
    report.budget = total;
    evaluate_range(report.records, perms, fitness, threads, "sweep");
    finish_report(report, watch);
    return report;
}

SearchReport random_search(int num_qubits, std::uint64_t budget, std::uint64_t seed,
                           const FitnessFn &fitness, int threads) {
    if (budget < 1) {
        throw ConfigError("random search budget must be >= 1");
    }
    Stopwatch watch;
    Rng rng(seed);
    std::vector<Permutation> perms;
    perms.reserve(budget);
    for (std::uint64_t i = 0; i < budget; ++i) {
        perms.push_back(random_permutation(num_qubits, rng));
    }

    SearchReport report;
    report.strategy = Strategy::Random;
    report.budget = budget;
    evaluate_range(report.records, perms, fitness, threads, "random search");
    finish_report(report, watch);
    return report;
}

SearchReport run_ga(const GaConfig &cfg, int num_qubits, const FitnessFn &fitness, int threads) {
    cfg.validate();
    Stopwatch watch;
    Rng rng(cfg.seed);
    const auto s_pop = static_cast<std::size_t>(cfg.s_pop);
    const auto n_elites = static_cast<std::size_t>(cfg.num_elites());

    SearchReport report;
    report.strategy = Strategy::Ga;
    report.budget = cfg.ga_budget();

    std::vector<Permutation> pop;
    pop.reserve(s_pop);
    for (std::size_t i = 0; i < s_pop; ++i) {
        pop.push_back(random_permutation(num_qubits, rng));
    }
    std::vector<FitnessRecord> pop_records;
    evaluate_range(pop_records, pop, fitness, threads, "GA generation 1");
    report.records = pop_records;

    for (int gen = 2; gen <= cfg.generations; ++gen) {
        // Sort the population by fitness, descending, stable.
        std::vector<std::size_t> order(s_pop);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return pop_records[a].combined > pop_records[b].combined;
        });
        std::vector<Permutation> sorted_pop;
        std::vector<FitnessRecord> sorted_records;
        sorted_pop.reserve(s_pop);
        sorted_records.reserve(s_pop);
        for (std::size_t idx : order) {
            sorted_pop.push_back(pop[idx]);
            sorted_records.push_back(pop_records[idx]);
        }
        std::vector<double> scores(s_pop);
        for (std::size_t i = 0; i < s_pop; ++i) {
            scores[i] = sorted_records[i].combined;
        }

        // Parent pool: one tournament winner per population slot.
        std::vector<std::size_t> parents(s_pop);
        for (std::size_t i = 0; i < s_pop; ++i) {
            parents[i] = tournament_select_index(scores, cfg.tournament_size, rng);
        }

        // Elites carry over unchanged; the rest are children.
        std::vector<Permutation> next_pop(sorted_pop.begin(),
                                          sorted_pop.begin() + static_cast<long>(n_elites));
        for (std::size_t slot = n_elites; slot < s_pop; ++slot) {
            const std::uint64_t a = rng.uniform_int(s_pop);
            std::uint64_t b = rng.uniform_int(s_pop - 1);
            if (b >= a) {
                ++b;
            }
            const Permutation &p1 = sorted_pop[parents[static_cast<std::size_t>(a)]];
            const Permutation &p2 = sorted_pop[parents[static_cast<std::size_t>(b)]];
            Permutation child = rng.uniform() < cfg.crossover_rate ? crossover(p1, p2, rng) : p1;
            if (rng.uniform() < cfg.mutation_rate) {
                child = mutate(child, rng);
            }
            next_pop.push_back(std::move(child));
        }

        pop = std::move(next_pop);
        const std::string what = "GA generation " + std::to_string(gen);
        if (cfg.cache_elites) {
            std::vector<FitnessRecord> child_records;
            evaluate_range(child_records,
                           std::span<const Permutation>(pop).subspan(n_elites), fitness,
                           threads, what);
            pop_records.assign(sorted_records.begin(),
                               sorted_records.begin() + static_cast<long>(n_elites));
            pop_records.insert(pop_records.end(), child_records.begin(), child_records.end());
            report.records.insert(report.records.end(), child_records.begin(),
                                  child_records.end());
        } else {
            pop_records.clear();
            evaluate_range(pop_records, pop, fitness, threads, what);
            report.records.insert(report.records.end(), pop_records.begin(), pop_records.end());
        }
    }

    finish_report(report, watch);
    return report;
}

} // namespace qes
