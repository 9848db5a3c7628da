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

// Scalar reference kernels. These define the semantics the SIMD variants are
// equivalence-tested against; keep them simple enough to audit by eye.

#include "qes/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace qes::kernels {

Mat2 matmul(const Mat2 &a, const Mat2 &b) {
    return Mat2{a.u00 * b.u00 + a.u01 * b.u10, a.u00 * b.u01 + a.u01 * b.u11,
                a.u10 * b.u00 + a.u11 * b.u10, a.u10 * b.u01 + a.u11 * b.u11};
}

Mat2 adjoint(const Mat2 &m) {
    return Mat2{std::conj(m.u00), std::conj(m.u10), std::conj(m.u01), std::conj(m.u11)};
}

double unitarity_defect(const Mat2 &m) {
    const Mat2 p = matmul(adjoint(m), m);
    double d = std::abs(p.u00 - Complex{1.0, 0.0});
    d = std::max(d, std::abs(p.u01));
    d = std::max(d, std::abs(p.u10));
    d = std::max(d, std::abs(p.u11 - Complex{1.0, 0.0}));
    return d;
}

namespace {

void apply_matrix1q_scalar(Complex *amps, std::size_t size, int target, const Mat2 &u) {
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex a0 = amps[i];
            const Complex a1 = amps[i + stride];
            amps[i] = u.u00 * a0 + u.u01 * a1;
            amps[i + stride] = u.u10 * a0 + u.u11 * a1;
        }
    }
}

void apply_cnot_scalar(Complex *amps, std::size_t size, int control, int target) {
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    for (std::size_t i = 0; i < size; ++i) {
        // Visit each swapped pair once, from its target=0 member.
        if ((i & cmask) != 0 && (i & tmask) == 0) {
            std::swap(amps[i], amps[i | tmask]);
        }
    }
}

double expval_z_scalar(const Complex *amps, std::size_t size, int qubit) {
    const std::size_t mask = std::size_t{1} << qubit;
    double plus = 0.0;
    double minus = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
        const double p = amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
        if ((i & mask) == 0) {
            plus += p;
        } else {
            minus += p;
        }
    }
    return plus - minus;
}

double norm_sq_scalar(const Complex *amps, std::size_t size) {
    double acc = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
        acc += amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    }
    return acc;
}

} // namespace

const KernelSet &scalar_kernels() {
    static const KernelSet set{apply_matrix1q_scalar, apply_cnot_scalar, expval_z_scalar,
                               norm_sq_scalar, "scalar"};
    return set;
}

} // namespace qes::kernels
