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

#ifndef MULTIELL_STATS_HPP
#define MULTIELL_STATS_HPP

#include "multiell/engine.hpp"

#include <span>
#include <vector>

namespace multiell {

/// Power-weighted histogram of AOAs: the power azimuth spectrum.
/// Bin k covers (-180 + k w, -180 + (k+1) w]; density is per degree.
struct AngularSpectrum {
    std::vector<double> bin_centers_deg;
    std::vector<double> density;
    double bin_width_deg = 1.0;
};

/// rms angle spread (deg): sqrt(sum w phi^2 - (sum w phi)^2) with w the path
/// powers normalized to unit sum and phi the AOA in (-180, 180]. Linear, not
/// circular, moments. Throws NoPower if no path carries power.
double angular_spread(std::span<const PathSample> paths);

/// Same moments with every AOA first re-expressed relative to `reference_deg`
/// and wrapped into (-180, 180] around it.
double angular_spread_about(std::span<const PathSample> paths, double reference_deg);

// Angle spread of a binned spectrum, evaluated at the bin centers.
double angular_spread(const AngularSpectrum &pas);

/// Throws BadBinWidth unless the width divides 360 deg, NoPower if no path
/// carries power.
AngularSpectrum estimate_pas(std::span<const PathSample> paths, double bin_width_deg);

/// Direction the spread of a realization is measured about: the Rx boresight
/// for a directional Rx, the direct-path direction (0 deg) for an omni Rx.
double spread_reference_deg(const AntennaPattern &rx);

} // namespace multiell

#endif
