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

namespace relaxforge::kernels {

namespace {

void matvec_multi_scalar(const double* mat, std::size_t n, std::size_t row_begin,
                         std::size_t row_end, const double* vecs, std::size_t nvec,
                         double* out) {
    for (std::size_t i = row_begin; i < row_end; ++i) {
        const double* mrow = mat + i * n;
        for (std::size_t v = 0; v < nvec; ++v) {
            const double* x = vecs + v * n;
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) acc += mrow[j] * x[j];
            out[v * n + i] = acc;
        }
    }
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += a[j] * b[j];
    return acc;
}

void complex_inner_scalar(const double* x_re, const double* x_im, const double* y_re,
                          const double* y_im, std::size_t n, double* re, double* im) {
    double acc_re = 0.0;
    double acc_im = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        acc_re += x_re[j] * y_re[j] + x_im[j] * y_im[j];
        acc_im += x_re[j] * y_im[j] - x_im[j] * y_re[j];
    }
    *re = acc_re;
    *im = acc_im;
}

void apply_phase_scalar(const double* c_re, const double* c_im, const double* cos_ph,
                        const double* sin_ph, std::size_t n, double* out_re, double* out_im) {
    for (std::size_t j = 0; j < n; ++j) {
        out_re[j] = c_re[j] * cos_ph[j] + c_im[j] * sin_ph[j];
        out_im[j] = c_im[j] * cos_ph[j] - c_re[j] * sin_ph[j];
    }
}

void hadamard_scalar(const double* a, const double* b, double* out, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) out[j] = a[j] * b[j];
}

double sum_abs4_scalar(const double* re, const double* im, std::size_t n) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double p = re[j] * re[j] + im[j] * im[j];
        acc += p * p;
    }
    return acc;
}

double sum_abs2_scalar(const double* re, const double* im, std::size_t n) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += re[j] * re[j] + im[j] * im[j];
    return acc;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops = {
        "scalar",        matvec_multi_scalar, dot_scalar,      complex_inner_scalar,
        apply_phase_scalar, hadamard_scalar,  sum_abs4_scalar, sum_abs2_scalar,
    };
    return ops;
}

}  // namespace relaxforge::kernels
