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

#include "qes/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qes/errors.hpp"

namespace qes {

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw ConfigError("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                          "], got " + std::to_string(num_qubits));
    }
    amps_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amps_[0] = Complex{1.0, 0.0};
}

void StateVector::reset() {
    std::fill(amps_.begin(), amps_.end(), Complex{0.0, 0.0});
    amps_[0] = Complex{1.0, 0.0};
}

double StateVector::norm() const { return std::sqrt(norm_sq()); }

double StateVector::expval_z(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw ConfigError("expval_z: qubit " + std::to_string(qubit) + " out of range for " +
                          std::to_string(num_qubits_) + " qubits");
    }
    return kernels::active_kernels().expval_z(amps_.data(), amps_.size(), qubit);
}

StateVector init_zero_state(int num_qubits) { return StateVector(num_qubits); }

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw ConfigError("fidelity: dimension mismatch");
    }
    Complex overlap{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        overlap += std::conj(a[i]) * b[i];
    }
    return std::norm(overlap);
}

} // namespace qes
