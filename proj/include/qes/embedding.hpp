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
 * Angle embedding of a feature permutation: qubit q receives RX(x[perm[2q]])
 * followed by RY(x[perm[2q+1]]). Exactly two features per qubit, RX first.
 *
 * A Permutation is an ordering of the 2n feature indices and is the
 * individual the search strategies evolve. Text form is comma-separated
 * indices, e.g. "3,2,0,5,1,4".
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qes/noise.hpp"
#include "qes/rng.hpp"
#include "qes/state.hpp"

namespace qes {

class Permutation {
  public:
    Permutation() = default;

    /// Takes ownership of `order`; throws ConfigError unless it is an exact
    /// permutation of {0, ..., len-1} with even, positive length.
    explicit Permutation(std::vector<int> order);

    /// (0, 1, ..., 2n-1).
    static Permutation identity(int num_qubits);

    /// Parses "i0,i1,...,i{2n-1}". Throws ConfigError on malformed input.
    static Permutation parse(const std::string &text);

    std::string to_string() const;

    int size() const { return static_cast<int>(order_.size()); }
    int num_qubits() const { return size() / 2; }
    int operator[](int i) const { return order_[static_cast<std::size_t>(i)]; }
    const std::vector<int> &order() const { return order_; }

    bool operator==(const Permutation &) const = default;

  private:
    std::vector<int> order_;
};

/// Uniformly random permutation of the 2n feature indices; deterministic for
/// a fixed Rng state.
Permutation random_permutation(int num_qubits, Rng &rng);

/// (2n)!. Throws ConfigError for 2n > 20 (would overflow 64 bits; a sweep of
/// that size is infeasible regardless).
std::uint64_t count_permutations(int num_qubits);

/// Embeds feature vector `x` (radians, length 2n) under `perm` into `state`.
/// The state is expected to be |0...0>; the gates are applied regardless.
void embed_inplace(StateVector &state, const Permutation &perm, std::span<const double> x,
                   NoiseCtx *noise = nullptr);

StateVector embed(StateVector state, const Permutation &perm, std::span<const double> x,
                  NoiseCtx *noise = nullptr);

} // namespace qes
