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

#include "qes/embedding.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <string>

#include "qes/errors.hpp"
#include "qes/gates.hpp"

namespace qes {

namespace {

void check_is_permutation(const std::vector<int> &order) {
    if (order.empty() || order.size() % 2 != 0) {
        throw ConfigError("permutation length must be even and positive, got " +
                          std::to_string(order.size()));
    }
    std::vector<bool> seen(order.size(), false);
    for (int v : order) {
        if (v < 0 || static_cast<std::size_t>(v) >= order.size() || seen[static_cast<std::size_t>(v)]) {
            throw ConfigError("not a permutation of {0..." + std::to_string(order.size() - 1) +
                              "}: index " + std::to_string(v) + " repeated or out of range");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

} // namespace

Permutation::Permutation(std::vector<int> order) : order_(std::move(order)) {
    check_is_permutation(order_);
}

Permutation Permutation::identity(int num_qubits) {
    if (num_qubits < 1) {
        throw ConfigError("permutation needs at least 1 qubit");
    }
    std::vector<int> order(static_cast<std::size_t>(2 * num_qubits));
    std::iota(order.begin(), order.end(), 0);
    return Permutation(std::move(order));
}

Permutation Permutation::parse(const std::string &text) {
    std::vector<int> order;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(item, &pos);
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) {
                ++pos;
            }
            if (pos != item.size()) {
                throw std::invalid_argument(item);
            }
            order.push_back(v);
        } catch (const std::exception &) {
            throw ConfigError("cannot parse permutation element '" + item + "' in \"" + text +
                              "\"");
        }
    }
    return Permutation(std::move(order));
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < order_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(order_[i]);
    }
    return out;
}

Permutation random_permutation(int num_qubits, Rng &rng) {
    Permutation p = Permutation::identity(num_qubits);
    std::vector<int> order = p.order();
    rng.shuffle(order);
    return Permutation(std::move(order));
}

std::uint64_t count_permutations(int num_qubits) {
    if (num_qubits < 1) {
        throw ConfigError("permutation count needs at least 1 qubit");
    }
    const int f = 2 * num_qubits;
    if (f > 20) {
        throw ConfigError("permutation count " + std::to_string(f) +
                          "! overflows 64 bits; a sweep at this size is infeasible");
    }
    std::uint64_t result = 1;
    for (int i = 2; i <= f; ++i) {
        result *= static_cast<std::uint64_t>(i);
    }
    return result;
}

void embed_inplace(StateVector &state, const Permutation &perm, std::span<const double> x,
                   NoiseCtx *noise) {
    const int n = state.num_qubits();
    if (perm.size() != 2 * n || x.size() != static_cast<std::size_t>(2 * n)) {
        throw ConfigError("embedding expects " + std::to_string(2 * n) +
                          " features, got permutation of " + std::to_string(perm.size()) +
                          " and " + std::to_string(x.size()) + " values");
    }
    for (int q = 0; q < n; ++q) {
        apply_gate_inplace(state, GateOp::rx(q, x[static_cast<std::size_t>(perm[2 * q])]));
        if (noise) {
            noise->after_1q_gate(state, q);
        }
        apply_gate_inplace(state, GateOp::ry(q, x[static_cast<std::size_t>(perm[2 * q + 1])]));
        if (noise) {
            noise->after_1q_gate(state, q);
        }
    }
}

StateVector embed(StateVector state, const Permutation &perm, std::span<const double> x,
                  NoiseCtx *noise) {
    embed_inplace(state, perm, x, noise);
    return state;
}

} // namespace qes
