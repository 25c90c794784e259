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

// AVX2/FMA variants of the inner-loop kernels. This translation unit is the
// only one compiled with -mavx2 -mfma; the dispatcher never calls into it
// unless the CPU reports both features.

#include "relaxforge/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace relaxforge::kernels {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_pd(lo, _mm_unpackhi_pd(lo, lo)));
}

// 2 rows x 4 packed vectors: 8 accumulators, 6 loads and 8 FMAs per
// 4-column step, which keeps the FMA ports saturated.
void rows2_vecs4(const double* r0, const double* r1, const double* const* x, std::size_t n,
                 double* acc0, double* acc1) {
    __m256d a00 = _mm256_setzero_pd(), a01 = _mm256_setzero_pd();
    __m256d a02 = _mm256_setzero_pd(), a03 = _mm256_setzero_pd();
    __m256d a10 = _mm256_setzero_pd(), a11 = _mm256_setzero_pd();
    __m256d a12 = _mm256_setzero_pd(), a13 = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d m0 = _mm256_loadu_pd(r0 + j);
        const __m256d m1 = _mm256_loadu_pd(r1 + j);
        const __m256d v0 = _mm256_loadu_pd(x[0] + j);
        const __m256d v1 = _mm256_loadu_pd(x[1] + j);
        const __m256d v2 = _mm256_loadu_pd(x[2] + j);
        const __m256d v3 = _mm256_loadu_pd(x[3] + j);
        a00 = _mm256_fmadd_pd(m0, v0, a00);
        a01 = _mm256_fmadd_pd(m0, v1, a01);
        a02 = _mm256_fmadd_pd(m0, v2, a02);
        a03 = _mm256_fmadd_pd(m0, v3, a03);
        a10 = _mm256_fmadd_pd(m1, v0, a10);
        a11 = _mm256_fmadd_pd(m1, v1, a11);
        a12 = _mm256_fmadd_pd(m1, v2, a12);
        a13 = _mm256_fmadd_pd(m1, v3, a13);
    }
    acc0[0] = hsum(a00); acc0[1] = hsum(a01); acc0[2] = hsum(a02); acc0[3] = hsum(a03);
    acc1[0] = hsum(a10); acc1[1] = hsum(a11); acc1[2] = hsum(a12); acc1[3] = hsum(a13);
    for (; j < n; ++j) {
        for (int v = 0; v < 4; ++v) {
            acc0[v] += r0[j] * x[v][j];
            acc1[v] += r1[j] * x[v][j];
        }
    }
}

void row1_vec1(const double* row, const double* x, std::size_t n, double* acc) {
    __m256d a0 = _mm256_setzero_pd();
    __m256d a1 = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 8 <= n; j += 8) {
        a0 = _mm256_fmadd_pd(_mm256_loadu_pd(row + j), _mm256_loadu_pd(x + j), a0);
        a1 = _mm256_fmadd_pd(_mm256_loadu_pd(row + j + 4), _mm256_loadu_pd(x + j + 4), a1);
    }
    double s = hsum(_mm256_add_pd(a0, a1));
    for (; j < n; ++j) s += row[j] * x[j];
    *acc = s;
}

void matvec_multi_avx2(const double* mat, std::size_t n, std::size_t row_begin,
                       std::size_t row_end, const double* vecs, std::size_t nvec,
                       double* out) {
    std::size_t i = row_begin;
    for (; i + 2 <= row_end; i += 2) {
        const double* r0 = mat + i * n;
        const double* r1 = mat + (i + 1) * n;
        std::size_t v = 0;
        for (; v + 4 <= nvec; v += 4) {
            const double* x[4] = {vecs + v * n, vecs + (v + 1) * n, vecs + (v + 2) * n,
                                  vecs + (v + 3) * n};
            double acc0[4], acc1[4];
            rows2_vecs4(r0, r1, x, n, acc0, acc1);
            for (int k = 0; k < 4; ++k) {
                out[(v + k) * n + i] = acc0[k];
                out[(v + k) * n + i + 1] = acc1[k];
            }
        }
        for (; v < nvec; ++v) {
            row1_vec1(r0, vecs + v * n, n, &out[v * n + i]);
            row1_vec1(r1, vecs + v * n, n, &out[v * n + i + 1]);
        }
    }
    if (i < row_end) {
        const double* r0 = mat + i * n;
        for (std::size_t v = 0; v < nvec; ++v) row1_vec1(r0, vecs + v * n, n, &out[v * n + i]);
    }
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    double s;
    row1_vec1(a, b, n, &s);
    return s;
}

void complex_inner_avx2(const double* x_re, const double* x_im, const double* y_re,
                        const double* y_im, std::size_t n, double* re, double* im) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d xr = _mm256_loadu_pd(x_re + j);
        const __m256d xi = _mm256_loadu_pd(x_im + j);
        const __m256d yr = _mm256_loadu_pd(y_re + j);
        const __m256d yi = _mm256_loadu_pd(y_im + j);
        acc_re = _mm256_fmadd_pd(xr, yr, acc_re);
        acc_re = _mm256_fmadd_pd(xi, yi, acc_re);
        acc_im = _mm256_fmadd_pd(xr, yi, acc_im);
        acc_im = _mm256_fnmadd_pd(xi, yr, acc_im);
    }
    double sr = hsum(acc_re);
    double si = hsum(acc_im);
    for (; j < n; ++j) {
        sr += x_re[j] * y_re[j] + x_im[j] * y_im[j];
        si += x_re[j] * y_im[j] - x_im[j] * y_re[j];
    }
    *re = sr;
    *im = si;
}

void apply_phase_avx2(const double* c_re, const double* c_im, const double* cos_ph,
                      const double* sin_ph, std::size_t n, double* out_re, double* out_im) {
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d cr = _mm256_loadu_pd(c_re + j);
        const __m256d ci = _mm256_loadu_pd(c_im + j);
        const __m256d cp = _mm256_loadu_pd(cos_ph + j);
        const __m256d sp = _mm256_loadu_pd(sin_ph + j);
        _mm256_storeu_pd(out_re + j, _mm256_fmadd_pd(ci, sp, _mm256_mul_pd(cr, cp)));
        _mm256_storeu_pd(out_im + j, _mm256_fnmadd_pd(cr, sp, _mm256_mul_pd(ci, cp)));
    }
    for (; j < n; ++j) {
        out_re[j] = c_re[j] * cos_ph[j] + c_im[j] * sin_ph[j];
        out_im[j] = c_im[j] * cos_ph[j] - c_re[j] * sin_ph[j];
    }
}

void hadamard_avx2(const double* a, const double* b, double* out, std::size_t n) {
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4)
        _mm256_storeu_pd(out + j, _mm256_mul_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j)));
    for (; j < n; ++j) out[j] = a[j] * b[j];
}

double sum_abs4_avx2(const double* re, const double* im, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d r = _mm256_loadu_pd(re + j);
        const __m256d i = _mm256_loadu_pd(im + j);
        const __m256d p = _mm256_fmadd_pd(i, i, _mm256_mul_pd(r, r));
        acc = _mm256_fmadd_pd(p, p, acc);
    }
    double s = hsum(acc);
    for (; j < n; ++j) {
        const double p = re[j] * re[j] + im[j] * im[j];
        s += p * p;
    }
    return s;
}

double sum_abs2_avx2(const double* re, const double* im, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d r = _mm256_loadu_pd(re + j);
        const __m256d i = _mm256_loadu_pd(im + j);
        acc = _mm256_fmadd_pd(i, i, _mm256_fmadd_pd(r, r, acc));
    }
    double s = hsum(acc);
    for (; j < n; ++j) s += re[j] * re[j] + im[j] * im[j];
    return s;
}

}  // namespace

const Ops* avx2_ops_impl() {
    static const Ops ops = {
        "avx2",          matvec_multi_avx2, dot_avx2,      complex_inner_avx2,
        apply_phase_avx2, hadamard_avx2,    sum_abs4_avx2, sum_abs2_avx2,
    };
    return &ops;
}

}  // namespace relaxforge::kernels

#else

namespace relaxforge::kernels {
const Ops* avx2_ops_impl() { return nullptr; }
}  // namespace relaxforge::kernels

#endif
