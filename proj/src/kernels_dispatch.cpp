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

#include "qes/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "qes/errors.hpp"

namespace qes::kernels {

bool avx2_supported() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

std::atomic<const KernelSet *> g_forced{nullptr};

const KernelSet &detect() {
    if (const char *env = std::getenv("QES_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) {
            return scalar_kernels();
        }
        if (std::strcmp(env, "avx2") == 0) {
            if (!avx2_supported()) {
                throw ConfigError("QES_KERNELS=avx2 requested but AVX2 is not available");
            }
            return avx2_kernels();
        }
        if (std::strcmp(env, "auto") != 0) {
            throw ConfigError(std::string("unknown QES_KERNELS value: ") + env);
        }
    }
    return avx2_supported() ? avx2_kernels() : scalar_kernels();
}

} // namespace

const KernelSet &active_kernels() {
    if (const KernelSet *forced = g_forced.load(std::memory_order_acquire)) {
        return *forced;
    }
    static const KernelSet &detected = detect();
    return detected;
}

void force_backend(Backend backend) {
    switch (backend) {
    case Backend::Auto:
        g_forced.store(nullptr, std::memory_order_release);
        return;
    case Backend::Scalar:
        g_forced.store(&scalar_kernels(), std::memory_order_release);
        return;
    case Backend::Avx2:
        if (!avx2_supported()) {
            throw ConfigError("AVX2 backend requested but not supported on this CPU");
        }
        g_forced.store(&avx2_kernels(), std::memory_order_release);
        return;
    }
}

} // namespace qes::kernels
