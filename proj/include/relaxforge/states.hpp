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
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "relaxforge/observable.hpp"

namespace relaxforge {

/// Provenance tag carried by every state: family, parameters, seed.
struct StateLabel {
    std::string family;
    std::vector<std::pair<std::string, double>> params;
    std::uint64_t seed = 0;

    std::string text() const;
};

/// Pure state in the energy eigenbasis, split real/imaginary storage.
struct PureState {
    std::vector<double> re, im;
    StateLabel label;

    std::size_t dimension() const { return re.size(); }
    double norm() const;
};

/// Nonnegative weight profile over observable eigenvalues, r(A) applied in
/// the A-eigenbasis. The name travels into state labels and manifests.
struct RFunction {
    std::string name;
    std::function<double(double)> fn;
};

/// Eigenvector of A by index (ascending eigenvalue order).
PureState observable_eigenstate(const Observable& observable, std::size_t index);

/// Eigenvector whose eigenvalue is closest to `target`; ties break toward
/// the lower index.
PureState observable_eigenstate_near(const Observable& observable, double target);

/// Unit vector drawn from the Haar measure (i.i.d. complex normals,
/// normalized).
PureState haar_random_state(std::size_t dimension, std::uint64_t seed);

/// sqrt(r(A)) |xi> with Haar |xi>, normalized. Throws NegativeWeight if
/// r < 0 anywhere on the spectrum of A. Emits warned_rough when r varies
/// fast on the eigenvalue-spacing scale (heuristic).
PureState r_set_state(const Observable& observable, const RFunction& r, std::uint64_t seed,
                      bool* warned_rough = nullptr);

/// (1 + lambda A)^{-1/2} |xi>, normalized. Throws SingularWeight if
/// 1 + lambda a_j <= 0 for some eigenvalue.
PureState unbiased_ensemble_state(const Observable& observable, double lambda,
                                  std::uint64_t seed);

/// g(lambda) = Tr{(1 + lambda A)^{-1} A} / Tr{(1 + lambda A)^{-1}}; the
/// ensemble-average expectation of the unbiased ensemble up to O(d^{-1/2}).
double unbiased_trace_expectation(const Observable& observable, double lambda);

/// Solve g(lambda) = target by bisection over the admissible lambda
/// interval (tolerance 1e-6). Throws Error when the target lies outside the
/// achievable range.
double calibrate_lambda(const Observable& observable, double target);

/// 1 / sum_j |c_j|^4 (inverse participation ratio over energy eigenstates).
double effective_dimension(const PureState& state);

/// <state| A |state> evaluated without time evolution.
double initial_expectation(const PureState& state, const Observable& observable);

}  // namespace relaxforge
