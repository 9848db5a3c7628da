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
 * The three search strategies over embedding permutations.
 *
 *  - sweep: every permutation in lexicographic order (bounded by a cap);
 *  - random: i.i.d. uniform permutations, duplicates allowed;
 *  - ga: generational genetic algorithm with tournament selection,
 *    prefix-preserving crossover, swap mutation and elitist retention.
 *
 * The GA evolution loop: the initial population counts as generation 1;
 * each later generation sorts by fitness (descending, stable), carries the
 * top floor(rr * s_pop) individuals over unchanged, fills a parent pool
 * with s_pop tournament winners, and creates children from two distinct
 * pool members (crossover with probability cr, otherwise a copy of the
 * first parent; then swap mutation with probability mr). Retained elites
 * keep their cached fitness records unless cache_elites is off, in which
 * case every generation re-evaluates the full population. The reported
 * best is the best individual seen across all generations.
 *
 * All strategies evaluate through a caller-supplied FitnessFn, so studies
 * bind the real trainer while tests can bind stubs. Evaluations within a
 * batch run in parallel; reports are order-deterministic regardless of
 * thread count.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qes/embedding.hpp"
#include "qes/fitness.hpp"
#include "qes/rng.hpp"

namespace qes {

struct GaConfig {
    int s_pop = 20;
    int generations = 5;
    double crossover_rate = 0.8;
    double retention_rate = 0.1;
    double mutation_rate = 0.001;
    int tournament_size = 2;
    std::uint64_t seed = 0;
    bool cache_elites = true;

    /// floor(retention_rate * s_pop).
    int num_elites() const;

    /// Nominal evaluation budget, s_pop * generations.
    std::uint64_t ga_budget() const {
        return static_cast<std::uint64_t>(s_pop) * static_cast<std::uint64_t>(generations);
    }

    /// Throws ConfigError unless rates are in [0,1], s_pop >= 2,
    /// generations >= 1, tournament_size >= 1 and num_elites() < s_pop.
    void validate() const;

    bool operator==(const GaConfig &) const = default;
};

enum class Strategy { Sweep, Random, Ga };

const char *strategy_name(Strategy s);
Strategy strategy_from_name(const std::string &name);

struct SearchReport {
    Strategy strategy = Strategy::Sweep;
    std::vector<FitnessRecord> records; // one entry per fitness evaluation
    FitnessRecord best;                 // max combined score, first on ties
    std::uint64_t budget = 0;           // nominal charge: (2n)!, budget, or s_pop*g
    std::uint64_t evaluations = 0;      // actual fitness calls (== records.size())
    std::uint64_t unique_permutations = 0; // distinct permutations evaluated
    double total_time = 0.0;            // seconds
};

using FitnessFn = std::function<FitnessRecord(const Permutation &)>;

/// Binds evaluate() over a study context.
FitnessFn make_fitness(const EvalContext &ctx);

/// Index of the tournament winner: draws `k` members uniformly without
/// replacement (with replacement when k > pop size) and returns the one
/// with the highest score, ties to the lower population index.
std::size_t tournament_select_index(std::span<const double> scores, int k, Rng &rng);

/// Permutation-returning form over a (population, scores) pair.
const Permutation &tournament_select(std::span<const Permutation> pop,
                                     std::span<const double> scores, int k, Rng &rng);

/// Deterministic crossover core: child takes p1 up to and including
/// `pivot`, then p2's remaining features in p2's order.
Permutation crossover_at(const Permutation &p1, const Permutation &p2, std::size_t pivot);

/// Random-pivot crossover (pivot uniform over positions of p1).
Permutation crossover(const Permutation &p1, const Permutation &p2, Rng &rng);

/// Deterministic mutation core: swaps positions i and j (i != j).
Permutation swap_mutation_at(const Permutation &perm, std::size_t i, std::size_t j);

/// Swaps two distinct uniformly chosen positions; output always differs
/// from the input.
Permutation mutate(const Permutation &perm, Rng &rng);

/// Evaluates every permutation of the 2n features in lexicographic order.
/// Throws ConfigError when (2n)! exceeds `cap`.
SearchReport sweep_search(int num_qubits, const FitnessFn &fitness, std::uint64_t cap = 5040,
                          int threads = 1);

/// Evaluates `budget` i.i.d. uniform permutations (duplicates allowed).
SearchReport random_search(int num_qubits, std::uint64_t budget, std::uint64_t seed,
                           const FitnessFn &fitness, int threads = 1);

/// Runs the genetic algorithm described above.
SearchReport run_ga(const GaConfig &cfg, int num_qubits, const FitnessFn &fitness,
                    int threads = 1);

} // namespace qes
