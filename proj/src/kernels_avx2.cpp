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

// AVX2/FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma and must only be entered after avx2_supported() returned true.
// A __m256d holds two interleaved complex doubles [re0, im0, re1, im1].

#include "qes/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace qes::kernels {

namespace {

// Per-128-bit-lane complex product c*v, where lane L of (cre, cim) carries
// the real/imaginary parts of the coefficient applied to complex L of v.
// fmaddsub computes cre*v -/+ cim*swap(v) with subtract on even elements,
// which is exactly (cr*xr - ci*xi, cr*xi + ci*xr).
inline __m256d cmul(__m256d v, __m256d cre, __m256d cim) {
    const __m256d vswap = _mm256_permute_pd(v, 0b0101);
    return _mm256_fmaddsub_pd(cre, v, _mm256_mul_pd(cim, vswap));
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline __m256d broadcast2(double a, double b) { return _mm256_setr_pd(a, a, b, b); }

void apply_matrix1q_avx2(Complex *amps, std::size_t size, int target, const Mat2 &u) {
    double *d = reinterpret_cast<double *>(amps);
    if (target == 0) {
        // Amplitude pairs are adjacent: one vector holds a full (a0, a1) pair.
        const __m256d col0re = broadcast2(u.u00.real(), u.u10.real());
        const __m256d col0im = broadcast2(u.u00.imag(), u.u10.imag());
        const __m256d col1re = broadcast2(u.u01.real(), u.u11.real());
        const __m256d col1im = broadcast2(u.u01.imag(), u.u11.imag());
        for (std::size_t i = 0; i < size; i += 2) {
            const __m256d x = _mm256_loadu_pd(d + 2 * i);
            const __m256d a0 = _mm256_permute2f128_pd(x, x, 0x00);
            const __m256d a1 = _mm256_permute2f128_pd(x, x, 0x11);
            const __m256d r =
                _mm256_add_pd(cmul(a0, col0re, col0im), cmul(a1, col1re, col1im));
            _mm256_storeu_pd(d + 2 * i, r);
        }
        return;
    }
    // stride >= 2: both halves of each pair are contiguous runs.
    const std::size_t stride = std::size_t{1} << target;
    const __m256d u00re = _mm256_set1_pd(u.u00.real());
    const __m256d u00im = _mm256_set1_pd(u.u00.imag());
    const __m256d u01re = _mm256_set1_pd(u.u01.real());
    const __m256d u01im = _mm256_set1_pd(u.u01.imag());
    const __m256d u10re = _mm256_set1_pd(u.u10.real());
    const __m256d u10im = _mm256_set1_pd(u.u10.imag());
    const __m256d u11re = _mm256_set1_pd(u.u11.real());
    const __m256d u11im = _mm256_set1_pd(u.u11.imag());
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; i += 2) {
            const __m256d va = _mm256_loadu_pd(d + 2 * i);
            const __m256d vb = _mm256_loadu_pd(d + 2 * (i + stride));
            const __m256d na = _mm256_add_pd(cmul(va, u00re, u00im), cmul(vb, u01re, u01im));
            const __m256d nb = _mm256_add_pd(cmul(va, u10re, u10im), cmul(vb, u11re, u11im));
            _mm256_storeu_pd(d + 2 * i, na);
            _mm256_storeu_pd(d + 2 * (i + stride), nb);
        }
    }
}

inline std::size_t insert_zero_bit(std::size_t v, int pos) {
    const std::size_t low = v & ((std::size_t{1} << pos) - 1);
    return ((v >> pos) << (pos + 1)) | low;
}

void apply_cnot_avx2(Complex *amps, std::size_t size, int control, int target) {
    double *d = reinterpret_cast<double *>(amps);
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    const int lo = control < target ? control : target;
    const int hi = control < target ? target : control;
    const std::size_t quarter = size / 4;

    if (target == 0) {
        // Partner amplitudes are adjacent: swap the two complex halves of a
        // vector in one permute.
        for (std::size_t k = 0; k < quarter; ++k) {
            const std::size_t i = insert_zero_bit(insert_zero_bit(k, lo), hi) | cmask;
            const __m256d x = _mm256_loadu_pd(d + 2 * i);
            _mm256_storeu_pd(d + 2 * i, _mm256_permute2f128_pd(x, x, 0x01));
        }
        return;
    }
    if (lo == 0) {
        // control == 0, target >= 1: isolated single-complex swaps.
        scalar_kernels().apply_cnot(amps, size, control, target);
        return;
    }
    // Swapped regions come in contiguous runs of 2^lo >= 2 complex.
    const std::size_t run = std::size_t{1} << lo;
    for (std::size_t k = 0; k < quarter; k += run) {
        const std::size_t i0 = insert_zero_bit(insert_zero_bit(k, lo), hi) | cmask;
        for (std::size_t j = 0; j < run; j += 2) {
            double *pa = d + 2 * (i0 + j);
            double *pb = d + 2 * ((i0 + j) | tmask);
            const __m256d va = _mm256_loadu_pd(pa);
            const __m256d vb = _mm256_loadu_pd(pb);
            _mm256_storeu_pd(pa, vb);
            _mm256_storeu_pd(pb, va);
        }
    }
}

double expval_z_avx2(const Complex *amps, std::size_t size, int qubit) {
    const double *d = reinterpret_cast<const double *>(amps);
    if (qubit == 0) {
        const __m256d sign = _mm256_setr_pd(1.0, 1.0, -1.0, -1.0);
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t i = 0; i < size; i += 2) {
            const __m256d v = _mm256_loadu_pd(d + 2 * i);
            acc = _mm256_fmadd_pd(_mm256_mul_pd(v, sign), v, acc);
        }
        return hsum(acc);
    }
    const std::size_t run = std::size_t{1} << qubit; // complex per sign run
    __m256d plus = _mm256_setzero_pd();
    __m256d minus = _mm256_setzero_pd();
    for (std::size_t base = 0; base < size; base += 2 * run) {
        for (std::size_t i = base; i < base + run; i += 2) {
            const __m256d v = _mm256_loadu_pd(d + 2 * i);
            plus = _mm256_fmadd_pd(v, v, plus);
        }
        for (std::size_t i = base + run; i < base + 2 * run; i += 2) {
            const __m256d v = _mm256_loadu_pd(d + 2 * i);
            minus = _mm256_fmadd_pd(v, v, minus);
        }
    }
    return hsum(plus) - hsum(minus);
}

double norm_sq_avx2(const Complex *amps, std::size_t size) {
    const double *d = reinterpret_cast<const double *>(amps);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < size; i += 2) {
        const __m256d v = _mm256_loadu_pd(d + 2 * i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    return hsum(acc);
}

} // namespace

const KernelSet &avx2_kernels() {
    static const KernelSet set{apply_matrix1q_avx2, apply_cnot_avx2, expval_z_avx2,
                               norm_sq_avx2, "avx2"};
    return set;
}

} // namespace qes::kernels

#else // non-x86 build: no AVX2 variant, dispatch falls back to scalar.

namespace qes::kernels {

const KernelSet &avx2_kernels() { return scalar_kernels(); }

} // namespace qes::kernels

#endif
