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
#include <string>
#include <vector>

#include "relaxforge/spectrum.hpp"

namespace relaxforge {

/// Desired relaxation curve f(t) with f(0) = 1. Two analytic families plus
/// tabulated curves (linear interpolation).
class TargetCurve {
public:
    enum class Kind { exponential, revival, sampled };

    /// f(t) = exp(-gamma t)
    static TargetCurve exponential(double gamma);

    /// Gaussian decay with a Gaussian revival at +-revival_time:
    /// f(t) = [c1 e^{-t^2/s^2} + c2 e^{-(t-tau)^2/s^2} + c2 e^{-(t+tau)^2/s^2}] / Z,
    /// Z chosen so f(0) = 1. c1 >= 2 c2 > 0 keeps the cosine transform nonnegative.
    static TargetCurve revival(double sigma, double revival_time, double c1, double c2);

    /// Tabulated (t_k, f_k), t_0 = 0, f_0 = 1 within 1e-9, t strictly increasing.
    static TargetCurve sampled(std::vector<double> t, std::vector<double> f);

    Kind kind() const { return kind_; }
    double operator()(double t) const;

    /// f'(0+); used for the quadrature endpoint correction.
    double initial_slope() const;

    /// Last sample time (sampled), or the time beyond which the curve stays
    /// below `floor` (analytic kinds).
    double cutoff_time(double floor = 1e-8) const;

    double gamma() const { return gamma_; }
    double sigma() const { return sigma_; }
    double revival_time() const { return revival_time_; }
    double weight_c1() const { return c1_; }
    double weight_c2() const { return c2_; }
    const std::vector<double>& sample_times() const { return sample_t_; }
    const std::vector<double>& sample_values() const { return sample_f_; }
    std::string describe() const;

private:
    TargetCurve() = default;

    Kind kind_ = Kind::exponential;
    double gamma_ = 1.0;
    double sigma_ = 1.0, revival_time_ = 0.0, c1_ = 1.0, c2_ = 0.0;
    std::vector<double> sample_t_, sample_f_;
};

/// f~(omega) >= 0 on a uniform symmetric grid, even by construction.
struct SpectralEnvelope {
    std::vector<double> omega;  // uniform over [-limit, +limit], odd length
    std::vector<double> value;

    double omega_limit() const { return omega.back(); }
    double omega_step() const { return omega[1] - omega[0]; }
    double max_value() const;

    /// Linear interpolation on the grid; exactly 0 outside it.
    double operator()(double w) const;
};

/// Cosine transform f~(w) = int_0^Tcut f(t) cos(w t) dt over the even
/// extension of f, by corrected trapezoidal quadrature. Small negative
/// quadrature noise (>= -1e-6 max) is clamped to zero; anything below that
/// throws PositivityViolation. grid_points must be odd so omega = 0 is on
/// the grid.
SpectralEnvelope spectral_envelope(const TargetCurve& curve, double omega_limit,
                                   std::size_t grid_points, std::size_t time_steps = 8192);

/// Smallest grid frequency beyond which every envelope value stays below
/// threshold * max. Throws NoCutoff when no such frequency exists.
double cutoff_frequency(const SpectralEnvelope& envelope, double threshold = 1e-3);

struct AdmissibilityReport {
    double omega_max = 0.0;
    double e_over_omega_max = 0.0;     // warn if < 5
    double envelope_variation = 0.0;   // max |f~(w + mean spacing) - f~(w)| / max f~
    double mean_spacing = 0.0;
    bool ratio_ok = false;
    bool smooth_ok = false;            // warn if variation > 1e-2
    bool pass() const { return ratio_ok && smooth_ok; }
};

/// Warn-only checks that the spectrum is wide and dense enough for the
/// envelope (the construction requires E >> omega_max and an envelope that
/// is smooth on the level-spacing scale).
AdmissibilityReport check_admissibility(const SpectralEnvelope& envelope,
                                        const Spectrum& spectrum, double threshold = 1e-3);

/// Centered moving average with odd window; optional preprocessing for
/// noisy tabulated curves.
std::vector<double> moving_average(const std::vector<double>& values, std::size_t window);

/// Reconstruct f(t) from the envelope (inverse cosine transform, trapezoid
/// over the stored grid).
double inverse_cosine_transform(const SpectralEnvelope& envelope, double t);

}  // namespace relaxforge
