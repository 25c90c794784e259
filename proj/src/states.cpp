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

#include "relaxforge/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "relaxforge/errors.hpp"
#include "relaxforge/kernels.hpp"
#include "relaxforge/linalg.hpp"
#include "relaxforge/rng.hpp"

namespace relaxforge {

std::string StateLabel::text() const {
    std::ostringstream os;
    os << family;
    for (const auto& [key, value] : params) os << " " << key << "=" << value;
    os << " seed=" << seed;
    return os.str();
}

double PureState::norm() const {
    return std::sqrt(kernels::active().sum_abs2(re.data(), im.data(), re.size()));
}

namespace {

void require_eigensystem(const Observable& observable, const char* who) {
    if (!observable.has_eigensystem())
        throw Error(std::string(who) + ": observable eigendecomposition not available");
}

void normalize(PureState& state) {
    const double n = state.norm();
    if (!(n > 0.0)) throw Error("state normalization: zero vector");
    const double inv = 1.0 / n;
    for (auto& x : state.re) x *= inv;
    for (auto& x : state.im) x *= inv;
}

}  // namespace

PureState observable_eigenstate(const Observable& observable, std::size_t index) {
    require_eigensystem(observable, "observable_eigenstate");
    if (index >= observable.dimension())
        throw Error("observable_eigenstate: index out of range");

    const std::size_t d = observable.dimension();
    PureState state;
    state.re.assign(observable.eigenvectors_rows.row(index),
                    observable.eigenvectors_rows.row(index) + d);
    state.im.assign(d, 0.0);
    state.label.family = "eigenstate";
    state.label.params = {{"a", observable.eigenvalues[index]},
                          {"index", static_cast<double>(index)}};
    return state;
}

PureState observable_eigenstate_near(const Observable& observable, double target) {
    require_eigensystem(observable, "observable_eigenstate");
    const auto& a = observable.eigenvalues;
    std::size_t best = 0;
    double best_dist = std::abs(a[0] - target);
    for (std::size_t j = 1; j < a.size(); ++j) {
        const double dist = std::abs(a[j] - target);
        if (dist < best_dist) {  // strict: ties stay at the lower index
            best = j;
            best_dist = dist;
        }
    }
    return observable_eigenstate(observable, best);
}

PureState haar_random_state(std::size_t dimension, std::uint64_t seed) {
    if (dimension == 0) throw Error("haar_random_state: dimension must be >= 1");
    rng::Generator gen(seed);
    PureState state;
    state.re.resize(dimension);
    state.im.resize(dimension);
    for (std::size_t j = 0; j < dimension; ++j) {
        state.re[j] = gen.normal();
        state.im[j] = gen.normal();
    }
    normalize(state);
    state.label.family = "haar";
    state.label.seed = seed;
    return state;
}

PureState r_set_state(const Observable& observable, const RFunction& r, std::uint64_t seed,
                      bool* warned_rough) {
    require_eigensystem(observable, "r_set_state");
    const std::size_t d = observable.dimension();
    const auto& a = observable.eigenvalues;

    std::vector<double> sqrt_r(d);
    double max_fd = 0.0;       // max finite-difference estimate of |r'|
    double max_step = 0.0;     // max |r(a_{j+1}) - r(a_j)|
    double prev = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        const double rj = r.fn(a[j]);
        if (rj < 0.0)
            throw NegativeWeight("r_set_state: r(" + std::to_string(a[j]) + ") < 0");
        sqrt_r[j] = std::sqrt(rj);
        if (j > 0) {
            const double step = std::abs(rj - prev);
            const double gap = a[j] - a[j - 1];
            max_step = std::max(max_step, step);
            if (gap > 0.0) max_fd = std::max(max_fd, step / gap);
        }
        prev = rj;
    }
    // "Varies little" heuristic: flag when a single eigenvalue step moves r
    // by much more than a smooth profile would.
    const double mean_gap = (a.back() - a.front()) / static_cast<double>(d - 1);
    const bool rough = max_step > 10.0 * mean_gap * max_fd && max_fd > 0.0;
    if (warned_rough != nullptr) *warned_rough = rough;

    PureState xi = haar_random_state(d, seed);

    // Components in the A-eigenbasis, weight by sqrt(r), transform back.
    std::vector<double> tmp(d), weighted(d);
    PureState state;
    state.re.resize(d);
    state.im.resize(d);

    linalg::project_rows(observable.eigenvectors_rows, xi.re.data(), tmp.data());
    for (std::size_t k = 0; k < d; ++k) weighted[k] = sqrt_r[k] * tmp[k];
    linalg::combine_rows(observable.eigenvectors_rows, weighted.data(), state.re.data());

    linalg::project_rows(observable.eigenvectors_rows, xi.im.data(), tmp.data());
    for (std::size_t k = 0; k < d; ++k) weighted[k] = sqrt_r[k] * tmp[k];
    linalg::combine_rows(observable.eigenvectors_rows, weighted.data(), state.im.data());

    normalize(state);
    state.label.family = "rset:" + r.name;
    state.label.seed = seed;
    return state;
}

PureState unbiased_ensemble_state(const Observable& observable, double lambda,
                                  std::uint64_t seed) {
    require_eigensystem(observable, "unbiased_ensemble_state");
    for (double a : observable.eigenvalues)
        if (1.0 + lambda * a <= 0.0)
            throw SingularWeight("unbiased_ensemble_state: 1 + lambda a <= 0 at a = " +
                                 std::to_string(a));
    RFunction r{"unbiased", [lambda](double a) { return 1.0 / (1.0 + lambda * a); }};
    PureState state = r_set_state(observable, r, seed);
    state.label.family = "unbiased";
    state.label.params = {{"lambda", lambda}};
    state.label.seed = seed;
    return state;
}

double unbiased_trace_expectation(const Observable& observable, double lambda) {
    require_eigensystem(observable, "unbiased_trace_expectation");
    double num = 0.0, den = 0.0;
    for (double a : observable.eigenvalues) {
        const double w = 1.0 / (1.0 + lambda * a);
        num += w * a;
        den += w;
    }
    return num / den;
}

double calibrate_lambda(const Observable& observable, double target) {
    require_eigensystem(observable, "calibrate_lambda");
    const double a_min = observable.eigenvalues.front();
    const double a_max = observable.eigenvalues.back();
    if (std::abs(target) >= 1.0) throw Error("calibrate_lambda: |target| must be < 1");

    // Admissible open interval: 1 + lambda a > 0 for all a.
    const double margin = 1e-12;
    const double lo = a_max > 0.0 ? -(1.0 - margin) / a_max : -1e12;
    const double hi = a_min < 0.0 ? (1.0 - margin) / (-a_min) : 1e12;

    // g is strictly decreasing: negative lambda up-weights the upper
    // spectrum.
    const double g_lo = unbiased_trace_expectation(observable, lo);
    const double g_hi = unbiased_trace_expectation(observable, hi);
    if (target > g_lo || target < g_hi)
        throw Error("calibrate_lambda: target " + std::to_string(target) +
                    " outside achievable range [" + std::to_string(g_hi) + ", " +
                    std::to_string(g_lo) + "]");

    double left = lo, right = hi;
    while (right - left > 1e-6) {
        const double mid = 0.5 * (left + right);
        if (unbiased_trace_expectation(observable, mid) > target)
            left = mid;
        else
            right = mid;
    }
    return 0.5 * (left + right);
}

double effective_dimension(const PureState& state) {
    const double p =
        kernels::active().sum_abs4(state.re.data(), state.im.data(), state.dimension());
    return 1.0 / p;
}

double initial_expectation(const PureState& state, const Observable& observable) {
    const std::size_t d = state.dimension();
    if (observable.dimension() != d)
        throw DimensionMismatch("initial_expectation: state/observable mismatch");
    const auto& ops = kernels::active();
    std::vector<double> out(2 * d);
    // u = A c (two real matvecs over the packed re/im block)
    std::vector<double> packed(2 * d);
    std::copy(state.re.begin(), state.re.end(), packed.begin());
    std::copy(state.im.begin(), state.im.end(), packed.begin() + d);
    ops.matvec_multi(observable.matrix.data(), d, 0, d, packed.data(), 2, out.data());
    double re = 0.0, im = 0.0;
    ops.complex_inner(state.re.data(), state.im.data(), out.data(), out.data() + d, d, &re, &im);
    return re;
}

}  // namespace relaxforge
