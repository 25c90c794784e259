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

#include "relaxforge/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "relaxforge/errors.hpp"
#include "relaxforge/rng.hpp"

namespace relaxforge {

std::vector<double> sample_wigner_dyson_spacings(std::size_t count, std::uint64_t seed) {
    rng::Generator gen(seed);
    std::vector<double> spacings(count);
    for (auto& s : spacings) {
        const double u = gen.uniform();
        s = std::sqrt(-4.0 * std::log1p(-u) / std::numbers::pi);
    }
    return spacings;
}

Spectrum build_spectrum(std::span<const double> spacings, double half_width) {
    if (half_width <= 0.0) throw Error("build_spectrum: half_width must be positive");
    if (spacings.empty()) throw Error("build_spectrum: need at least one spacing");

    Spectrum spec;
    spec.half_width = half_width;
    spec.energies.resize(spacings.size() + 1);

    double running = 0.0;
    spec.energies[0] = 0.0;
    for (std::size_t j = 0; j < spacings.size(); ++j) {
        if (!(spacings[j] > 0.0)) throw Error("build_spectrum: spacings must be positive");
        running += spacings[j];
        spec.energies[j + 1] = running;
    }

    const double total = running;
    for (auto& e : spec.energies) e = -half_width + 2.0 * half_width * (e / total);
    // Pin the endpoints; the affine map already lands within rounding.
    spec.energies.front() = -half_width;
    spec.energies.back() = half_width;

    for (std::size_t j = 0; j + 1 < spec.energies.size(); ++j)
        if (!(spec.energies[j] < spec.energies[j + 1]))
            throw Error("build_spectrum: energies not strictly increasing (spacing underflow)");
    return spec;
}

GapRatioStats gap_ratio_statistics(const Spectrum& spectrum, std::size_t bins) {
    const auto& e = spectrum.energies;
    if (e.size() < 3) throw Error("gap_ratio_statistics: need dimension >= 3");

    GapRatioStats stats;
    stats.histogram.assign(bins, 0);
    stats.bin_width = 1.0 / static_cast<double>(bins);

    double sum = 0.0;
    const std::size_t n = e.size() - 2;
    for (std::size_t j = 0; j < n; ++j) {
        const double g0 = e[j + 1] - e[j];
        const double g1 = e[j + 2] - e[j + 1];
        const double r = std::min(g0, g1) / std::max(g0, g1);
        sum += r;
        auto bin = static_cast<std::size_t>(r * static_cast<double>(bins));
        if (bin >= bins) bin = bins - 1;
        ++stats.histogram[bin];
    }
    stats.mean_r_tilde = sum / static_cast<double>(n);
    return stats;
}

}  // namespace relaxforge
