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

#include "relaxforge/observable.hpp"

#include <cmath>
#include <cstdint>

#include "relaxforge/errors.hpp"
#include "relaxforge/kernels.hpp"
#include "relaxforge/linalg.hpp"
#include "relaxforge/rng.hpp"

namespace relaxforge {

Observable build_observable(const Spectrum& spectrum, const SpectralEnvelope& envelope,
                            std::uint64_t seed) {
    const std::size_t d = spectrum.dimension();
    if (d < 2) throw DimensionMismatch("build_observable: need dimension >= 2");

    Observable obs;
    obs.matrix = Matrix(d, d);
    obs.scale_c1 = 1.0;

    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
    const auto& eps = spectrum.energies;
    double* a = obs.matrix.data();

    // Upper triangle row by row, one RNG substream per row; mirrored below.
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t j = 0; j < d; ++j) {
        rng::Generator gen(rng::derive_stream(seed, j));
        double* row = a + j * d;
        for (std::size_t l = j; l < d; ++l) {
            const double amp = envelope(eps[l] - eps[j]);
            row[l] = amp > 0.0 ? std::sqrt(amp) * inv_sqrt_d * gen.normal() : 0.0;
        }
    }
    for (std::size_t j = 1; j < d; ++j)
        for (std::size_t l = 0; l < j; ++l) a[j * d + l] = a[l * d + j];

    return obs;
}

void scale_to_unit_extremes(Observable& observable) {
    const std::size_t d = observable.dimension();
    double max_abs = 0.0;
    for (std::size_t i = 0; i < d * d; ++i)
        max_abs = std::max(max_abs, std::abs(observable.matrix.data()[i]));
    if (max_abs == 0.0) throw ZeroMatrix("scale_to_unit_extremes: matrix is identically zero");

    linalg::EigenSystem eig = linalg::eigh(observable.matrix);
    const double extreme = std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
    const double factor = 1.0 / extreme;

    for (std::size_t i = 0; i < d * d; ++i) observable.matrix.data()[i] *= factor;
    for (auto& v : eig.values) v *= factor;

    observable.scale_c1 *= factor;
    observable.eigenvalues = std::move(eig.values);
    observable.eigenvectors_rows = std::move(eig.vectors_rows);
}

std::vector<double> weighted_cosine_trace(const Matrix& weights, const Spectrum& spectrum,
                                          std::span<const double> times) {
    const std::size_t d = spectrum.dimension();
    if (weights.rows() != d || weights.cols() != d)
        throw DimensionMismatch("weighted_cosine_trace: weight matrix / spectrum mismatch");

    const auto& ops = kernels::active();
    std::vector<double> out(times.size());

    // S(t) = c^T W c + s^T W s with c_j = cos(eps_j t), s_j = sin(eps_j t);
    // the sin part of exp(i(eps_j - eps_l)t) cancels by symmetry of W.
#pragma omp parallel
    {
        std::vector<double> phase(2 * d), result(2 * d);
#pragma omp for schedule(dynamic, 1)
        for (std::size_t k = 0; k < times.size(); ++k) {
            const double t = times[k];
            double* cosv = phase.data();
            double* sinv = phase.data() + d;
            for (std::size_t j = 0; j < d; ++j) {
                cosv[j] = std::cos(spectrum.energies[j] * t);
                sinv[j] = std::sin(spectrum.energies[j] * t);
            }
            ops.matvec_multi(weights.data(), d, 0, d, phase.data(), 2, result.data());
            out[k] = ops.dot(cosv, result.data(), d) + ops.dot(sinv, result.data() + d, d);
        }
    }
    return out;
}

namespace {

Matrix hadamard_product(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows(), a.cols());
    kernels::active().hadamard(a.data(), b.data(), out.data(), a.size());
    return out;
}

}  // namespace

std::vector<double> autocorrelation(const Observable& observable, const Spectrum& spectrum,
                                    std::span<const double> times) {
    const Matrix w = hadamard_product(observable.matrix, observable.matrix);
    std::vector<double> values = weighted_cosine_trace(w, spectrum, times);

    // Normalize by the kernel's own t = 0 evaluation so C(0) is exactly 1
    // when 0 is among the sampled times.
    const double t0[1] = {0.0};
    const double norm = weighted_cosine_trace(w, spectrum, t0)[0];
    for (auto& v : values) v /= norm;
    return values;
}

std::vector<double> moment_correlation(const Observable& observable, const Spectrum& spectrum,
                                       int moment_power, std::span<const double> times) {
    if (moment_power < 1) throw Error("moment_correlation: N must be >= 1");
    const std::size_t d = observable.dimension();

    Matrix power = observable.matrix;
    for (int n = 1; n < moment_power; ++n) power = linalg::matmul(power, observable.matrix);

    const Matrix w = hadamard_product(observable.matrix, power);
    std::vector<double> values = weighted_cosine_trace(w, spectrum, times);

    if (moment_power % 2 == 1) {
        const double t0[1] = {0.0};
        const double norm = weighted_cosine_trace(w, spectrum, t0)[0];
        for (auto& v : values) v /= norm;
    } else {
        // ||A|| = max |a| = 1 after scaling; the natural magnitude of the
        // trace is d, so this normalization is dimensionless.
        double norm = static_cast<double>(d);
        if (observable.has_eigensystem()) {
            const double spec_norm = std::max(std::abs(observable.eigenvalues.front()),
                                              std::abs(observable.eigenvalues.back()));
            double p = 1.0;
            for (int n = 0; n <= moment_power; ++n) p *= spec_norm;
            norm *= p;
        }
        for (auto& v : values) v /= norm;
    }
    return values;
}

}  // namespace relaxforge
