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

#pragma once

#include <cstddef>

namespace relaxforge::kernels {

// The arithmetic inner loops of the trajectory and correlation evaluators.
// Scalar reference implementations define the semantics; the AVX2 variants
// must agree with them to rounding accuracy (equivalence-tested). A given
// output element is always accumulated in a fixed order, so results are
// reproducible for any thread count.

struct Ops {
    const char* name;

    // For every row i in [row_begin, row_end):
    //   out[v * n + i] = sum_j mat[i * n + j] * vecs[v * n + j]   for v in [0, nvec)
    // mat is a dense row-major n x n block, vecs/out hold nvec packed rows.
    void (*matvec_multi)(const double* mat, std::size_t n, std::size_t row_begin,
                         std::size_t row_end, const double* vecs, std::size_t nvec,
                         double* out);

    double (*dot)(const double* a, const double* b, std::size_t n);

    // (re, im) of <x|y> for split-complex vectors.
    void (*complex_inner)(const double* x_re, const double* x_im, const double* y_re,
                          const double* y_im, std::size_t n, double* re, double* im);

    // out = c * (cos - i sin) elementwise, i.e. multiply by exp(-i phase_j).
    void (*apply_phase)(const double* c_re, const double* c_im, const double* cos_ph,
                        const double* sin_ph, std::size_t n, double* out_re, double* out_im);

    void (*hadamard)(const double* a, const double* b, double* out, std::size_t n);

    // sum_j (re_j^2 + im_j^2)^2  -- inverse participation ratio numerator.
    double (*sum_abs4)(const double* re, const double* im, std::size_t n);

    // sum_j (re_j^2 + im_j^2)
    double (*sum_abs2)(const double* re, const double* im, std::size_t n);
};

enum class Backend { scalar, avx2 };

/// Kernel table selected at startup: AVX2+FMA when the CPU supports it,
/// scalar otherwise. RELAXFORGE_KERNELS=scalar|avx2 overrides.
const Ops& active();

const Ops& scalar_ops();

/// Null when this build or CPU cannot run AVX2.
const Ops* avx2_ops();

/// Force a backend (tests); throws Error if unavailable.
void force_backend(Backend backend);

Backend active_backend();

}  // namespace relaxforge::kernels
