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

#include "relaxforge/linalg.hpp"

#include <cblas.h>
#include <lapacke.h>

#include <stdexcept>
#include <string>

#include "relaxforge/errors.hpp"

extern "C" void openblas_set_num_threads(int);

namespace relaxforge::linalg {

EigenSystem eigh(const Matrix& sym) {
    if (sym.rows() != sym.cols() || sym.empty())
        throw DimensionMismatch("eigh: matrix must be square and nonempty");
    const auto n = static_cast<lapack_int>(sym.rows());

    EigenSystem out;
    out.values.resize(sym.rows());
    out.vectors_rows = sym;  // dsyevd overwrites with eigenvectors

    // A symmetric row-major buffer is its own transpose, so we can run the
    // column-major LAPACK path with no conversion. Output column k
    // (column-major) then lands in row k of our row-major view, which is
    // exactly the vectors_rows layout.
    const lapack_int info =
        LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, out.vectors_rows.data(), n,
                       out.values.data());
    if (info != 0) throw Error("dsyevd failed, info=" + std::to_string(info));
    return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dimensions differ");
    Matrix c(a.rows(), b.cols());
    cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, static_cast<int>(a.rows()),
                static_cast<int>(b.cols()), static_cast<int>(a.cols()), 1.0, a.data(),
                static_cast<int>(a.cols()), b.data(), static_cast<int>(b.cols()), 0.0, c.data(),
                static_cast<int>(c.cols()));
    return c;
}

void project_rows(const Matrix& rows, const double* x, double* y) {
    cblas_dgemv(CblasRowMajor, CblasNoTrans, static_cast<int>(rows.rows()),
                static_cast<int>(rows.cols()), 1.0, rows.data(), static_cast<int>(rows.cols()), x,
                1, 0.0, y, 1);
}

void combine_rows(const Matrix& rows, const double* x, double* y) {
    cblas_dgemv(CblasRowMajor, CblasTrans, static_cast<int>(rows.rows()),
                static_cast<int>(rows.cols()), 1.0, rows.data(), static_cast<int>(rows.cols()), x,
                1, 0.0, y, 1);
}

void set_blas_threads(int n) { openblas_set_num_threads(n > 0 ? n : 1); }

}  // namespace relaxforge::linalg
