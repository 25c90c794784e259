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

#include "relaxforge/dynamics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>

#include "relaxforge/errors.hpp"
#include "relaxforge/kernels.hpp"

namespace relaxforge {

namespace {

constexpr double kImagResidualBound = 1e-8;

void fill_phases(const Spectrum& spectrum, double t, double* cosv, double* sinv) {
    const auto& eps = spectrum.energies;
    const std::size_t d = eps.size();
    for (std::size_t j = 0; j < d; ++j) {
        cosv[j] = std::cos(eps[j] * t);
        sinv[j] = std::sin(eps[j] * t);
    }
}

}  // namespace

std::vector<double> time_grid(double dt, std::size_t steps) {
    if (!(dt > 0.0) || steps == 0) throw Error("time_grid: need dt > 0 and steps >= 1");
    std::vector<double> t(steps);
    for (std::size_t m = 0; m < steps; ++m) t[m] = dt * static_cast<double>(m);
    return t;
}

PureState evolve(const PureState& state, const Spectrum& spectrum, double t) {
    const std::size_t d = state.dimension();
    if (spectrum.dimension() != d) throw DimensionMismatch("evolve: state/spectrum mismatch");

    PureState out;
    out.label = state.label;
    out.re.resize(d);
    out.im.resize(d);

    std::vector<double> cosv(d), sinv(d);
    fill_phases(spectrum, t, cosv.data(), sinv.data());
    kernels::active().apply_phase(state.re.data(), state.im.data(), cosv.data(), sinv.data(), d,
                                  out.re.data(), out.im.data());
    return out;
}

std::vector<Trajectory> expectation_trajectories(std::span<const PureState> states,
                                                 const Observable& observable,
                                                 const Spectrum& spectrum,
                                                 std::span<const double> times) {
    const std::size_t d = observable.dimension();
    if (spectrum.dimension() != d)
        throw DimensionMismatch("expectation_trajectories: observable/spectrum mismatch");
    for (const auto& s : states)
        if (s.dimension() != d)
            throw DimensionMismatch("expectation_trajectories: state dimension mismatch");

    const std::size_t n_states = states.size();
    const std::size_t packed = 2 * n_states;
    const auto& ops = kernels::active();

    std::vector<Trajectory> out(n_states);
    for (std::size_t s = 0; s < n_states; ++s) {
        out[s].kind = Trajectory::Kind::expectation;
        out[s].state_label = states[s].label;
        out[s].times.assign(times.begin(), times.end());
        out[s].values.resize(times.size());
    }
    if (n_states == 0 || times.empty()) return out;

    Matrix z(packed, d);
    Matrix u(packed, d);
    std::vector<double> cosv(d), sinv(d);

    for (std::size_t k = 0; k < times.size(); ++k) {
        fill_phases(spectrum, times[k], cosv.data(), sinv.data());

#pragma omp parallel for schedule(static)
        for (std::size_t s = 0; s < n_states; ++s)
            ops.apply_phase(states[s].re.data(), states[s].im.data(), cosv.data(), sinv.data(), d,
                            z.row(2 * s), z.row(2 * s + 1));

        // One streaming pass over A covers every state at this time point.
#pragma omp parallel for schedule(dynamic, 1)
        for (std::size_t r0 = 0; r0 < d; r0 += 128) {
            const std::size_t r1 = std::min(d, r0 + 128);
            ops.matvec_multi(observable.matrix.data(), d, r0, r1, z.data(), packed, u.data());
        }

        double worst_imag = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst_imag)
        for (std::size_t s = 0; s < n_states; ++s) {
            double re = 0.0, im = 0.0;
            ops.complex_inner(z.row(2 * s), z.row(2 * s + 1), u.row(2 * s), u.row(2 * s + 1), d,
                              &re, &im);
            worst_imag = std::max(worst_imag, std::abs(im));
            out[s].values[k] = re;
        }
        if (worst_imag > kImagResidualBound)
            throw Error("expectation_trajectories: imaginary residual " +
                        std::to_string(worst_imag));
    }
    return out;
}

Trajectory expectation_trajectory(const PureState& state, const Observable& observable,
                                  const Spectrum& spectrum, std::span<const double> times) {
    return expectation_trajectories({&state, 1}, observable, spectrum, times)[0];
}

double expectation_direct_sum(const PureState& state, const Observable& observable,
                              const Spectrum& spectrum, double t) {
    const std::size_t d = state.dimension();
    if (observable.dimension() != d || spectrum.dimension() != d)
        throw DimensionMismatch("expectation_direct_sum: dimension mismatch");

    // sum_{j,l} conj(c_j) c_l A_jl exp(i (eps_j - eps_l) t), term by term.
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        const std::complex<double> cj(state.re[j], -state.im[j]);
        for (std::size_t l = 0; l < d; ++l) {
            const double w = (spectrum.energies[j] - spectrum.energies[l]) * t;
            const std::complex<double> cl(state.re[l], state.im[l]);
            acc += cj * cl * observable.matrix(j, l) *
                   std::complex<double>(std::cos(w), std::sin(w));
        }
    }
    return acc.real();
}

Trajectory fidelity_trajectory(const PureState& state, const Spectrum& spectrum,
                               std::span<const double> times) {
    const std::size_t d = state.dimension();
    if (spectrum.dimension() != d)
        throw DimensionMismatch("fidelity_trajectory: state/spectrum mismatch");

    std::vector<double> weight(d);
    for (std::size_t j = 0; j < d; ++j)
        weight[j] = state.re[j] * state.re[j] + state.im[j] * state.im[j];

    Trajectory out;
    out.kind = Trajectory::Kind::fidelity;
    out.state_label = state.label;
    out.times.assign(times.begin(), times.end());
    out.values.resize(times.size());

    const auto& ops = kernels::active();
#pragma omp parallel
    {
        std::vector<double> cosv(d), sinv(d);
#pragma omp for schedule(static)
        for (std::size_t k = 0; k < times.size(); ++k) {
            fill_phases(spectrum, times[k], cosv.data(), sinv.data());
            const double re = ops.dot(weight.data(), cosv.data(), d);
            const double im = ops.dot(weight.data(), sinv.data(), d);
            out.values[k] = re * re + im * im;
        }
    }
    return out;
}

EnsembleTrajectory ensemble_trajectory(std::span<const PureState> states,
                                       const Observable& observable, const Spectrum& spectrum,
                                       std::span<const double> times) {
    if (states.empty()) throw Error("ensemble_trajectory: need at least one state");
    const auto trajectories = expectation_trajectories(states, observable, spectrum, times);

    EnsembleTrajectory out;
    out.times.assign(times.begin(), times.end());
    out.mean.resize(times.size());
    out.spread.resize(times.size());
    const double n = static_cast<double>(states.size());
    for (std::size_t k = 0; k < times.size(); ++k) {
        double mean = 0.0;
        for (const auto& tr : trajectories) mean += tr.values[k];
        mean /= n;
        double var = 0.0;
        for (const auto& tr : trajectories) {
            const double dev = tr.values[k] - mean;
            var += dev * dev;
        }
        out.mean[k] = mean;
        out.spread[k] = std::sqrt(var / n);
    }
    return out;
}

double diagonal_ensemble_value(const PureState& state, const Observable& observable) {
    const std::size_t d = state.dimension();
    if (observable.dimension() != d)
        throw DimensionMismatch("diagonal_ensemble_value: dimension mismatch");
    double acc = 0.0;
    for (std::size_t j = 0; j < d; ++j)
        acc += (state.re[j] * state.re[j] + state.im[j] * state.im[j]) * observable.matrix(j, j);
    return acc;
}

}  // namespace relaxforge
