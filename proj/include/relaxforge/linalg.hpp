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

#include <cstdint>
#include <vector>

#include "relaxforge/matrix.hpp"

namespace relaxforge::linalg {

/// Eigendecomposition of a real symmetric matrix. values ascending;
/// row k of vectors_rows is the (unit) eigenvector of values[k].
struct EigenSystem {
    std::vector<double> values;
    Matrix vectors_rows;
};

EigenSystem eigh(const Matrix& sym);

/// c = a * b for square row-major matrices (BLAS-backed).
Matrix matmul(const Matrix& a, const Matrix& b);

/// y = vectors_rows * x, i.e. project x onto each row (basis change
/// energy -> observable eigenbasis when rows are eigenvectors).
void project_rows(const Matrix& rows, const double* x, double* y);

/// y = vectors_rows^T * x (the inverse basis change for orthonormal rows).
void combine_rows(const Matrix& rows, const double* x, double* y);

/// Caps BLAS/LAPACK threads (OpenMP threads are set separately).
void set_blas_threads(int n);

}  // namespace relaxforge::linalg
