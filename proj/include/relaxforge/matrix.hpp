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
#include <cstdlib>
#include <cstring>
#include <memory>
#include <span>
#include <utility>

namespace relaxforge {

namespace detail {
struct AlignedFree {
    void operator()(double* p) const noexcept { std::free(p); }
};
}  // namespace detail

/// Dense row-major matrix of doubles, 64-byte aligned rows start.
/// Row-major keeps eigenvectors and matrix rows contiguous for the kernels.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
        if (rows_ * cols_ > 0) {
            const std::size_t bytes = ((rows_ * cols_ * sizeof(double) + 63) / 64) * 64;
            data_.reset(static_cast<double*>(std::aligned_alloc(64, bytes)));
            std::memset(data_.get(), 0, bytes);
        }
    }

    Matrix(const Matrix& other) : Matrix(other.rows_, other.cols_) {
        if (size() > 0) std::memcpy(data_.get(), other.data_.get(), size() * sizeof(double));
    }

    Matrix& operator=(const Matrix& other) {
        if (this != &other) {
            Matrix tmp(other);
            *this = std::move(tmp);
        }
        return *this;
    }

    Matrix(Matrix&&) noexcept = default;
    Matrix& operator=(Matrix&&) noexcept = default;

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return rows_ * cols_; }
    bool empty() const noexcept { return size() == 0; }

    double* data() noexcept { return data_.get(); }
    const double* data() const noexcept { return data_.get(); }

    double* row(std::size_t i) noexcept { return data_.get() + i * cols_; }
    const double* row(std::size_t i) const noexcept { return data_.get() + i * cols_; }

    std::span<double> row_span(std::size_t i) noexcept { return {row(i), cols_}; }
    std::span<const double> row_span(std::size_t i) const noexcept { return {row(i), cols_}; }

    double& operator()(std::size_t i, std::size_t j) noexcept { return data_.get()[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_.get()[i * cols_ + j]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::unique_ptr<double[], detail::AlignedFree> data_;
};

}  // namespace relaxforge
