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

#include <span>
#include <vector>

#include "relaxforge/observable.hpp"
#include "relaxforge/states.hpp"

namespace relaxforge {

struct Trajectory {
    enum class Kind { expectation, fidelity };
    std::vector<double> times;
    std::vector<double> values;
    Kind kind = Kind::expectation;
    StateLabel state_label;
};

/// Uniform grid {0, dt, ..., (steps-1) dt}.
std::vector<double> time_grid(double dt, std::size_t steps);

/// Exact propagation in the energy eigenbasis: c_j -> c_j exp(-i eps_j t).
PureState evolve(const PureState& state, const Spectrum& spectrum, double t);

/// <A(t)> = c(t)^dag A c(t) per time point; O(d^2) each. The imaginary
/// residual is checked against 1e-8.
Trajectory expectation_trajectory(const PureState& state, const Observable& observable,
                                  const Spectrum& spectrum, std::span<const double> times);

/// Batched variant: one pass through A covers all states at a given time.
std::vector<Trajectory> expectation_trajectories(std::span<const PureState> states,
                                                 const Observable& observable,
                                                 const Spectrum& spectrum,
                                                 std::span<const double> times);

/// The O(d^2) Fourier double-sum route for the same quantity; slow, kept as
/// an independent cross-check of the matvec path.
double expectation_direct_sum(const PureState& state, const Observable& observable,
                              const Spectrum& spectrum, double t);

/// F(t) = |sum_j |c_j|^2 exp(-i eps_j t)|^2; O(d) per time point.
Trajectory fidelity_trajectory(const PureState& state, const Spectrum& spectrum,
                               std::span<const double> times);

struct EnsembleTrajectory {
    std::vector<double> times;
    std::vector<double> mean;
    std::vector<double> spread;  // population standard deviation across states
};

/// Pointwise mean and spread of <A(t)> across a set of states.
EnsembleTrajectory ensemble_trajectory(std::span<const PureState> states,
                                       const Observable& observable, const Spectrum& spectrum,
                                       std::span<const double> times);

/// Long-time average sum_j |c_j|^2 A_jj (the equilibrium reference).
double diagonal_ensemble_value(const PureState& state, const Observable& observable);

}  // namespace relaxforge
