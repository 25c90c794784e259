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

#include "relaxforge/target.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "relaxforge/errors.hpp"

namespace relaxforge {

namespace {
constexpr double kNormTolerance = 1e-9;
}

TargetCurve TargetCurve::exponential(double gamma) {
    if (!(gamma > 0.0)) throw Error("exponential curve: gamma must be positive");
    TargetCurve c;
    c.kind_ = Kind::exponential;
    c.gamma_ = gamma;
    return c;
}

TargetCurve TargetCurve::revival(double sigma, double revival_time, double c1, double c2) {
    if (!(sigma > 0.0) || !(revival_time > 0.0))
        throw Error("revival curve: sigma and revival_time must be positive");
    if (!(c2 > 0.0) || !(c1 >= 2.0 * c2))
        throw Error("revival curve: weights must satisfy c1 >= 2 c2 > 0");
    TargetCurve c;
    c.kind_ = Kind::revival;
    c.sigma_ = sigma;
    c.revival_time_ = revival_time;
    c.c1_ = c1;
    c.c2_ = c2;
    return c;
}

TargetCurve TargetCurve::sampled(std::vector<double> t, std::vector<double> f) {
    if (t.size() != f.size() || t.size() < 2) throw Error("sampled curve: need >= 2 samples");
    if (t.front() != 0.0) throw Error("sampled curve: first sample must be at t = 0");
    if (std::abs(f.front() - 1.0) > kNormTolerance)
        throw Error("sampled curve: f(0) must be 1 within 1e-9");
    for (std::size_t k = 0; k + 1 < t.size(); ++k)
        if (!(t[k] < t[k + 1])) throw Error("sampled curve: times must be strictly increasing");
    TargetCurve c;
    c.kind_ = Kind::sampled;
    c.sample_t_ = std::move(t);
    c.sample_f_ = std::move(f);
    return c;
}

double TargetCurve::operator()(double t) const {
    switch (kind_) {
        case Kind::exponential:
            return std::exp(-gamma_ * t);
        case Kind::revival: {
            const double s2 = sigma_ * sigma_;
            const double z =
                c1_ + 2.0 * c2_ * std::exp(-revival_time_ * revival_time_ / s2);
            const double dm = t - revival_time_;
            const double dp = t + revival_time_;
            return (c1_ * std::exp(-t * t / s2) + c2_ * std::exp(-dm * dm / s2) +
                    c2_ * std::exp(-dp * dp / s2)) /
                   z;
        }
        case Kind::sampled: {
            if (t < sample_t_.front() || t > sample_t_.back())
                throw Error("sampled curve: t outside tabulated range");
            const auto it = std::upper_bound(sample_t_.begin(), sample_t_.end(), t);
            if (it == sample_t_.end()) return sample_f_.back();
            const auto hi = static_cast<std::size_t>(it - sample_t_.begin());
            const std::size_t lo = hi - 1;
            const double w = (t - sample_t_[lo]) / (sample_t_[hi] - sample_t_[lo]);
            return sample_f_[lo] + w * (sample_f_[hi] - sample_f_[lo]);
        }
    }
    return 0.0;
}

double TargetCurve::initial_slope() const {
    switch (kind_) {
        case Kind::exponential:
            return -gamma_;
        case Kind::revival:
            // The curve is even in t, so the t = 0 slope vanishes (the two
            // shifted Gaussians cancel each other's derivative there).
            return 0.0;
        case Kind::sampled:
            return (sample_f_[1] - sample_f_[0]) / (sample_t_[1] - sample_t_[0]);
    }
    return 0.0;
}

double TargetCurve::cutoff_time(double floor) const {
    switch (kind_) {
        case Kind::exponential:
            return -std::log(floor) / gamma_;
        case Kind::revival: {
            // Beyond the revival all three Gaussians decay monotonically;
            // bound each term by its peak weight.
            const double z =
                c1_ + 2.0 * c2_ * std::exp(-revival_time_ * revival_time_ / (sigma_ * sigma_));
            const double amp = (c1_ + 2.0 * c2_) / z;
            double t = revival_time_ + sigma_ * std::sqrt(std::log(amp / floor));
            while ((*this)(t) >= floor) t += sigma_;
            return t;
        }
        case Kind::sampled:
            return sample_t_.back();
    }
    return 0.0;
}

std::string TargetCurve::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::exponential:
            os << "exponential(gamma=" << gamma_ << ")";
            break;
        case Kind::revival:
            os << "revival(sigma=" << sigma_ << ", tau_r=" << revival_time_ << ", c1=" << c1_
               << ", c2=" << c2_ << ")";
            break;
        case Kind::sampled:
            os << "sampled(" << sample_t_.size() << " points, t_max=" << sample_t_.back() << ")";
            break;
    }
    return os.str();
}

double SpectralEnvelope::max_value() const {
    return *std::max_element(value.begin(), value.end());
}

double SpectralEnvelope::operator()(double w) const {
    const double limit = omega_limit();
    if (w < -limit || w > limit) return 0.0;
    const double step = omega_step();
    const double pos = (w + limit) / step;
    auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= omega.size()) return value.back();
    const double frac = pos - static_cast<double>(lo);
    return value[lo] + frac * (value[lo + 1] - value[lo]);
}

SpectralEnvelope spectral_envelope(const TargetCurve& curve, double omega_limit,
                                   std::size_t grid_points, std::size_t time_steps) {
    if (!(omega_limit > 0.0)) throw Error("spectral_envelope: omega_limit must be positive");
    if (grid_points < 3 || grid_points % 2 == 0)
        throw Error("spectral_envelope: grid_points must be odd and >= 3");
    if (time_steps < 16) throw Error("spectral_envelope: time_steps too small");

    const double t_cut = curve.cutoff_time();
    const double h = t_cut / static_cast<double>(time_steps);

    std::vector<double> f_values(time_steps + 1);
    for (std::size_t k = 0; k <= time_steps; ++k)
        f_values[k] = curve(h * static_cast<double>(k));

    SpectralEnvelope env;
    env.omega.resize(grid_points);
    env.value.resize(grid_points);
    const std::size_t half = grid_points / 2;
    const double step = omega_limit / static_cast<double>(half);
    for (std::size_t i = 0; i < grid_points; ++i)
        env.omega[i] = step * (static_cast<double>(i) - static_cast<double>(half));
    env.omega[half] = 0.0;

    // Trapezoid plus the h^2/12 Euler-Maclaurin endpoint term. The t = 0
    // endpoint derivative of f(t) cos(wt) is just f'(0), independent of w;
    // the t = T_cut end is below the cutoff floor and is dropped.
    const double endpoint_correction = (h * h / 12.0) * curve.initial_slope();

#pragma omp parallel for schedule(static)
    for (std::size_t i = half; i < grid_points; ++i) {
        const double w = env.omega[i];
        double acc = 0.5 * (f_values[0] + f_values[time_steps] * std::cos(w * t_cut));
        for (std::size_t k = 1; k < time_steps; ++k)
            acc += f_values[k] * std::cos(w * h * static_cast<double>(k));
        env.value[i] = acc * h + endpoint_correction;
    }
    for (std::size_t i = 0; i < half; ++i) env.value[i] = env.value[grid_points - 1 - i];

    const double max_val = env.max_value();
    if (!(max_val > 0.0)) throw PositivityViolation("spectral envelope has no positive weight");
    const double clamp_floor = -1e-6 * max_val;
    for (auto& v : env.value) {
        if (v < 0.0) {
            if (v < clamp_floor)
                throw PositivityViolation(
                    "target curve is inadmissible: envelope value " + std::to_string(v) +
                    " below -1e-6 * max(" + std::to_string(max_val) + ")");
            v = 0.0;
        }
    }
    return env;
}

double cutoff_frequency(const SpectralEnvelope& envelope, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0))
        throw Error("cutoff_frequency: threshold must be in (0, 1)");
    const double bound = threshold * envelope.max_value();
    const std::size_t half = envelope.omega.size() / 2;

    // Last grid frequency (by modulus) at or above the bound; evenness lets
    // us scan the nonnegative half only. The maximum itself sits on this
    // half, so a hit always exists.
    std::size_t last = half;
    for (std::size_t i = envelope.omega.size(); i-- > half;) {
        if (envelope.value[i] >= bound) {
            last = i;
            break;
        }
    }
    if (last + 1 == envelope.omega.size())
        throw NoCutoff("envelope never drops below threshold within the grid");
    return envelope.omega[last];
}

AdmissibilityReport check_admissibility(const SpectralEnvelope& envelope,
                                        const Spectrum& spectrum, double threshold) {
    AdmissibilityReport report;
    report.omega_max = cutoff_frequency(envelope, threshold);
    report.mean_spacing = spectrum.mean_spacing();
    report.e_over_omega_max =
        report.omega_max > 0.0 ? spectrum.half_width / report.omega_max
                               : std::numeric_limits<double>::infinity();
    report.ratio_ok = report.e_over_omega_max >= 5.0;

    const double max_val = envelope.max_value();
    double max_step = 0.0;
    for (double w : envelope.omega) {
        const double delta = std::abs(envelope(w + report.mean_spacing) - envelope(w));
        max_step = std::max(max_step, delta);
    }
    report.envelope_variation = max_step / max_val;
    report.smooth_ok = report.envelope_variation <= 1e-2;
    return report;
}

std::vector<double> moving_average(const std::vector<double>& values, std::size_t window) {
    if (window < 2 || window % 2 == 0) return values;
    const std::size_t half = window / 2;
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const std::size_t lo = i >= half ? i - half : 0;
        const std::size_t hi = std::min(values.size() - 1, i + half);
        double acc = 0.0;
        for (std::size_t k = lo; k <= hi; ++k) acc += values[k];
        out[i] = acc / static_cast<double>(hi - lo + 1);
    }
    return out;
}

double inverse_cosine_transform(const SpectralEnvelope& envelope, double t) {
    // f(t) = (2/pi) int_0^inf f~(w) cos(wt) dw, trapezoid on the stored grid.
    const std::size_t half = envelope.omega.size() / 2;
    const double step = envelope.omega_step();
    double acc = 0.5 * envelope.value[half];  // w = 0 endpoint
    for (std::size_t i = half + 1; i + 1 < envelope.omega.size(); ++i)
        acc += envelope.value[i] * std::cos(envelope.omega[i] * t);
    acc += 0.5 * envelope.value.back() * std::cos(envelope.omega.back() * t);
    return acc * step * 2.0 / std::numbers::pi;
}

}  // namespace relaxforge
