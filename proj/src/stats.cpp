// SPDX-License-Identifier: Apache-2.0
//
// multiell - Monte Carlo simulator for the multi-elliptical propagation model
// Copyright (C) 2026 The multiell authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "multiell/stats.hpp"

#include "multiell/angles.hpp"
#include "multiell/error.hpp"

#include <cmath>
#include <string>

namespace multiell {

namespace {

template <class AngleOf, class WeightOf, class Range>
double weighted_spread(const Range &items, AngleOf angle_of, WeightOf weight_of)
{
    double total = 0.0;
    for (const auto &it : items)
        total += weight_of(it);
    if (!(total > 0.0))
        throw NoPower("angle spread needs at least one path with positive power");

    double mean = 0.0;
    for (const auto &it : items)
        mean += weight_of(it) / total * angle_of(it);
    // Central second moment; algebraically the same as E[phi^2] - E[phi]^2.
    double var = 0.0;
    for (const auto &it : items) {
        const double d = angle_of(it) - mean;
        var += weight_of(it) / total * d * d;
    }
    return std::sqrt(var);
}

} // namespace

double angular_spread(std::span<const PathSample> paths)
{
    return weighted_spread(
        paths, [](const PathSample &p) { return p.aoa_deg; }, [](const PathSample &p) { return p.power_lin; });
}

double angular_spread_about(std::span<const PathSample> paths, double reference_deg)
{
    return weighted_spread(
        paths, [reference_deg](const PathSample &p) { return wrap_deg(p.aoa_deg - reference_deg); },
        [](const PathSample &p) { return p.power_lin; });
}

double angular_spread(const AngularSpectrum &pas)
{
    std::vector<std::size_t> idx(pas.density.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    return weighted_spread(
        idx, [&](std::size_t i) { return pas.bin_centers_deg[i]; }, [&](std::size_t i) { return pas.density[i]; });
}

AngularSpectrum estimate_pas(std::span<const PathSample> paths, double bin_width_deg)
{
    const double bins_real = 360.0 / bin_width_deg;
    const double bins_rounded = std::round(bins_real);
    if (!(bin_width_deg > 0.0) || !std::isfinite(bins_real) || std::abs(bins_real - bins_rounded) > 1e-9 ||
        bins_rounded < 1.0)
        throw BadBinWidth("bin width " + std::to_string(bin_width_deg) + " deg does not divide 360 deg");

    const auto nbins = static_cast<std::size_t>(bins_rounded);
    AngularSpectrum pas;
    pas.bin_width_deg = bin_width_deg;
    pas.bin_centers_deg.resize(nbins);
    pas.density.assign(nbins, 0.0);
    for (std::size_t k = 0; k < nbins; ++k)
        pas.bin_centers_deg[k] = -180.0 + (static_cast<double>(k) + 0.5) * bin_width_deg;

    double total = 0.0;
    for (const auto &p : paths) {
        // Bins are open on the left: (lo, hi].
        const double pos = (wrap_deg(p.aoa_deg) + 180.0) / bin_width_deg;
        auto k = static_cast<std::ptrdiff_t>(std::ceil(pos)) - 1;
        if (k < 0)
            k = 0;
        if (k >= static_cast<std::ptrdiff_t>(nbins))
            k = static_cast<std::ptrdiff_t>(nbins) - 1;
        pas.density[static_cast<std::size_t>(k)] += p.power_lin;
        total += p.power_lin;
    }
    if (!(total > 0.0))
        throw NoPower("spectrum needs at least one path with positive power");
    for (auto &d : pas.density)
        d /= total * bin_width_deg;
    return pas;
}

double spread_reference_deg(const AntennaPattern &rx)
{
    return rx.is_directional() ? rx.boresight_deg : 0.0;
}

} // namespace multiell
