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
 * Dense complex statevector with value semantics.
 *
 * Convention, asserted everywhere: qubit q is bit q of the amplitude index,
 * so qubit 0 is the least significant bit. Global phase is not tracked; all
 * observables exposed by the library are phase-insensitive.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qes/kernels.hpp"

namespace qes {

using Complex = kernels::Complex;

inline constexpr int kMaxQubits = 20; // dense storage: 2^20 amplitudes

class StateVector {
  public:
    /// Constructs |0...0> on `num_qubits` qubits. Throws ConfigError unless
    /// 1 <= num_qubits <= kMaxQubits.
    explicit StateVector(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    std::size_t size() const { return amps_.size(); }

    /// Resets to |0...0> without reallocating.
    void reset();

    Complex &operator[](std::size_t i) { return amps_[i]; }
    const Complex &operator[](std::size_t i) const { return amps_[i]; }
    Complex *data() { return amps_.data(); }
    const Complex *data() const { return amps_.data(); }

    double norm_sq() const { return kernels::active_kernels().norm_sq(amps_.data(), amps_.size()); }
    double norm() const;

    /// <Z> on `qubit`: sum of (+1|-1)*|amp|^2 with sign given by the qubit's
    /// bit in the basis index. Throws ConfigError on a bad index.
    double expval_z(int qubit) const;

    bool operator==(const StateVector &) const = default;

  private:
    int num_qubits_;
    std::vector<Complex> amps_;
};

/// |0...0> on n qubits.
StateVector init_zero_state(int num_qubits);

/// Fidelity |<a|b>|^2 of two states of equal dimension.
double fidelity(const StateVector &a, const StateVector &b);

} // namespace qes
