// Copyright 2026 The relaxforge authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "relaxforge/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "relaxforge/errors.hpp"

namespace relaxforge::kernels {

// Defined in kernels_avx2.cpp (returns nullptr when that TU was built
// without AVX2 support).
const Ops* avx2_ops_impl();

namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Ops* select_default() {
    const char* env = std::getenv("RELAXFORGE_KERNELS");
    if (env != nullptr) {
        if (std::strcmp(env, "scalar") == 0) return &scalar_ops();
        if (std::strcmp(env, "avx2") == 0 && avx2_ops() != nullptr) return avx2_ops();
    }
    if (avx2_ops() != nullptr) return avx2_ops();
    return &scalar_ops();
}

std::atomic<const Ops*>& active_slot() {
    static std::atomic<const Ops*> slot{select_default()};
    return slot;
}

}  // namespace

const Ops* avx2_ops() {
    static const Ops* ops = cpu_has_avx2_fma() ? avx2_ops_impl() : nullptr;
    return ops;
}

const Ops& active() { return *active_slot().load(std::memory_order_relaxed); }

void force_backend(Backend backend) {
    if (backend == Backend::scalar) {
        active_slot().store(&scalar_ops(), std::memory_order_relaxed);
        return;
    }
    const Ops* ops = avx2_ops();
    if (ops == nullptr) throw Error("avx2 kernels unavailable on this CPU/build");
    active_slot().store(ops, std::memory_order_relaxed);
}

Backend active_backend() {
    return &active() == &scalar_ops() ? Backend::scalar : Backend::avx2;
}

}  // namespace relaxforge::kernels
