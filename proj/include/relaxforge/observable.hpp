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
#include <span>
#include <vector>

#include "relaxforge/matrix.hpp"
#include "relaxforge/spectrum.hpp"
#include "relaxforge/target.hpp"

namespace relaxforge {

/// Dense real-symmetric observable in the energy eigenbasis:
/// A_jl = C1 d^{-1/2} sqrt(f~(eps_j - eps_l)) R_jl with R_jl ~ N(0, 1).
struct Observable {
    Matrix matrix;                       // d x d, exactly symmetric
    double scale_c1 = 1.0;
    std::vector<double> eigenvalues;     // ascending; empty until decomposed
    Matrix eigenvectors_rows;            // row k = eigenvector of eigenvalues[k]

    std::size_t dimension() const { return matrix.rows(); }
    bool has_eigensystem() const { return !eigenvalues.empty(); }
};

/// Draw the ETH matrix for the given spectrum and envelope (C1 = 1, not yet
/// scaled). Rows use independent derived RNG substreams, so the result is
/// identical for any thread count.
Observable build_observable(const Spectrum& spectrum, const SpectralEnvelope& envelope,
                            std::uint64_t seed);

/// Full eigendecomposition, then rescale so max(|a_1|, |a_d|) = 1 exactly.
/// scale_c1 accumulates the applied factor. Throws ZeroMatrix for an
/// identically zero matrix.
void scale_to_unit_extremes(Observable& observable);

/// Normalized autocorrelation Tr{A(t) A} / Tr{A^2}; exactly 1 at t = 0.
std::vector<double> autocorrelation(const Observable& observable, const Spectrum& spectrum,
                                    std::span<const double> times);

/// Normalized Tr{A(t) A^N}: odd N divided by its own t = 0 value (so the
/// curve starts at 1), even N divided by d * ||A||^{N+1} (dimensionless
/// residual scale). N = 1 matches autocorrelation.
std::vector<double> moment_correlation(const Observable& observable, const Spectrum& spectrum,
                                       int moment_power, std::span<const double> times);

/// Shared kernel: S(t) = sum_{j,l} W_jl cos((eps_j - eps_l) t) for a
/// symmetric weight matrix W, evaluated per time point.
std::vector<double> weighted_cosine_trace(const Matrix& weights, const Spectrum& spectrum,
                                          std::span<const double> times);

}  // namespace relaxforge
