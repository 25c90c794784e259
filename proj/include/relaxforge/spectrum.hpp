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

namespace relaxforge {

/// Hamiltonian spectrum: strictly increasing energies spanning exactly
/// [-half_width, +half_width], with constant mean density of states.
struct Spectrum {
    std::vector<double> energies;
    double half_width = 0.0;

    std::size_t dimension() const { return energies.size(); }
    double mean_spacing() const {
        return 2.0 * half_width / static_cast<double>(energies.size() - 1);
    }
};

/// i.i.d. draws from the beta=1 Wigner surmise P(s) = (pi s / 2) exp(-pi s^2 / 4),
/// via inverse CDF s = sqrt(-4 ln(1-u) / pi). Unit mean. Fully determined by seed.
std::vector<double> sample_wigner_dyson_spacings(std::size_t count, std::uint64_t seed);

/// Cumulative sums of the spacings, affinely mapped so the first energy is
/// exactly -half_width and the last exactly +half_width.
/// Throws Error on any nonpositive spacing or half_width <= 0.
Spectrum build_spectrum(std::span<const double> spacings, double half_width);

struct GapRatioStats {
    double mean_r_tilde = 0.0;                // mean of min(l_j, l_{j+1}) / max(...)
    std::vector<std::size_t> histogram;       // counts over [0, 1]
    double bin_width = 0.0;
};

/// Consecutive-gap ratio statistics; distinguishes Wigner-Dyson from
/// Poissonian level statistics without unfolding.
GapRatioStats gap_ratio_statistics(const Spectrum& spectrum, std::size_t bins = 50);

}  // namespace relaxforge
