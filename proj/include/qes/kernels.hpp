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
 * Statevector arithmetic kernels.
 *
 * Every amplitude-level inner loop of the simulator lives here: applying a
 * 2x2 unitary at a target qubit, the CNOT permutation, Pauli-Z expectation
 * values, and the squared norm. Each kernel exists as a scalar reference
 * implementation and, on x86-64, an AVX2/FMA variant. The active set is
 * chosen once at startup from CPUID, can be forced through the QES_KERNELS
 * environment variable ("scalar" or "avx2"), and is overridable from code
 * for equivalence tests.
 *
 * Amplitudes are std::complex<double> in a dense array of length 2^n, and
 * qubit q addresses bit q of the amplitude index (qubit 0 = least
 * significant bit).
 */

#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace qes::kernels {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix.
struct Mat2 {
    Complex u00, u01, u10, u11;
};

/// Product a*b of two 2x2 matrices.
Mat2 matmul(const Mat2 &a, const Mat2 &b);

/// Conjugate transpose.
Mat2 adjoint(const Mat2 &m);

/// max_ij |(a†a - I)_ij|; zero for a unitary matrix.
double unitarity_defect(const Mat2 &m);

struct KernelSet {
    /// amps <- U acting on `target` of every basis pair (i, i | 1<<target).
    void (*apply_matrix1q)(Complex *amps, std::size_t size, int target, const Mat2 &u);
    /// Swaps amplitude pairs (i, i ^ 1<<target) wherever bit `control` is set.
    void (*apply_cnot)(Complex *amps, std::size_t size, int control, int target);
    /// Sum over basis states of (+|-)1 * |amp|^2, sign by bit `qubit`.
    double (*expval_z)(const Complex *amps, std::size_t size, int qubit);
    /// Sum of |amp|^2.
    double (*norm_sq)(const Complex *amps, std::size_t size);
    const char *name;
};

/// Portable reference kernels. Always available.
const KernelSet &scalar_kernels();

/// True when the running CPU executes AVX2+FMA.
bool avx2_supported();

/// AVX2 kernels; only valid to call when avx2_supported(). On non-x86 builds
/// this returns the scalar set.
const KernelSet &avx2_kernels();

enum class Backend { Auto, Scalar, Avx2 };

/// The kernel set all simulator code dispatches through. Resolution order:
/// force_backend() override, then QES_KERNELS, then CPUID.
const KernelSet &active_kernels();

/// Overrides kernel selection (test hook). Backend::Auto restores detection.
/// Throws ConfigError if the requested backend is unsupported on this CPU.
void force_backend(Backend backend);

} // namespace qes::kernels
