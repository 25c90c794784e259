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
#include <optional>
#include <span>
#include <vector>

#include "relaxforge/dynamics.hpp"
#include "relaxforge/observable.hpp"
#include "relaxforge/states.hpp"
#include "relaxforge/target.hpp"

namespace relaxforge {

/// Which curve the eigenstate trajectories are compared against.
enum class DeviationReference {
    target,           // the prescribed f(t)
    autocorrelation,  // measured Tr{A A(t)} / Tr{A^2}; removes the shared
                      // construction error, leaving the pure per-state noise
};

struct DeviationReport {
    struct PerState {
        std::size_t index = 0;
        double eigenvalue = 0.0;
        double mean_square = 0.0;         // time-averaged squared deviation
        std::vector<double> samples;      // D^t on the grid
    };
    std::vector<PerState> per_state;
    double global_mean = 0.0;             // mean of per-state mean squares
    std::size_t dimension = 0;
    double time_window = 0.0;
    DeviationReference reference = DeviationReference::target;
};

/// Deviations of every stride-th eigenstate trajectory from
/// a_j * reference(t), squared and time-averaged over the grid.
DeviationReport deviation_report(const Observable& observable, const Spectrum& spectrum,
                                 const TargetCurve& target, std::size_t eigenstate_stride,
                                 std::span<const double> times,
                                 DeviationReference reference = DeviationReference::target);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double r_squared = 0.0;
};

LinearFit linear_regression(std::span<const double> x, std::span<const double> y);

double pearson_correlation(std::span<const double> x, std::span<const double> y);

struct ScalingPoint {
    std::size_t dimension = 0;
    double mean_deviation = 0.0;          // D_d averaged over seed replicates
    std::vector<double> replicates;
};

struct ScalingFit {
    std::vector<ScalingPoint> points;
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// OLS fit of log D vs log d. Points must all be positive.
ScalingFit fit_power_law(std::span<const ScalingPoint> points);

/// One full construction per (dimension, seed): spectrum, envelope,
/// observable, eigenstates, deviations.
struct ScalingProtocol {
    std::vector<std::size_t> dimensions;
    std::vector<std::uint64_t> seeds;     // replicate seeds, averaged per d
    double half_width = 10.0;
    TargetCurve target = TargetCurve::exponential(1.0);
    std::size_t envelope_grid = 4097;
    std::size_t min_states = 100;         // stride chosen as d / min_states
    double dt = 0.25;
    double time_window = 13.0;
    DeviationReference reference = DeviationReference::autocorrelation;
};

ScalingFit finite_size_scaling(const ScalingProtocol& protocol);

/// Weight profile rebuilt per dimension for the typicality sweeps.
struct RDescriptor {
    enum class Kind { uniform, unbiased_lambda, smoothed_step };
    Kind kind = Kind::uniform;
    double param = 0.0;  // lambda for unbiased_lambda, step width for smoothed_step

    RFunction materialize() const;
    std::string name() const;
};

struct TypicalityPoint {
    std::size_t dimension = 0;
    double weight_variance_ratio = 0.0;   // var(<xi|r(A)|xi>) * (d+1) / chi^2[r(A)]
    double expectation_variance = 0.0;    // var of <eta|A(0)|eta> across draws
    double mean_expectation = 0.0;
    double trace_prediction = 0.0;        // Tr{r(A) A} / Tr{r(A)}
    std::vector<double> late_time_gaps;   // |<eta|A(t)|eta> - prediction| means
    double violation_fraction = 0.0;      // draws beyond 10 predicted sigma
};

struct TypicalityReport {
    std::vector<TypicalityPoint> points;
    double variance_slope = 0.0;          // log-log slope of expectation_variance vs d
    double variance_r_squared = 0.0;
};

struct TypicalityProtocol {
    std::vector<std::size_t> dimensions;
    std::uint64_t seed = 1;
    double half_width = 10.0;
    TargetCurve target = TargetCurve::revival(1.75, 10.0, 1.0, 0.4);
    std::size_t envelope_grid = 4097;
    RDescriptor r;
    std::size_t n_samples = 100;
    std::vector<double> late_times = {4.0, 8.0};
};

TypicalityReport typicality_test(const TypicalityProtocol& protocol);

struct MomentRelationReport {
    struct Entry {
        int moment_power = 0;
        double even_residual_max = 0.0;   // even N: max |normalized trace|
        double odd_pearson = 0.0;         // odd N: correlation with the N=1 curve
    };
    std::vector<Entry> entries;
};

/// Normalized Tr{A(t) A^N} for N = 1..n_max with incremental matrix powers.
MomentRelationReport moment_relation_suite(const Observable& observable,
                                           const Spectrum& spectrum, int n_max,
                                           std::span<const double> times);

}  // namespace relaxforge
