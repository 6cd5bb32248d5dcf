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

#include "multiell/geometry.hpp"

#include "multiell/angles.hpp"
#include "multiell/error.hpp"

#include <cmath>
#include <string>

namespace multiell {

namespace {

void check_eccentricity(double e)
{
    if (!(e >= 0.0 && e < 1.0))
        throw InvalidGeometry("eccentricity must lie in [0, 1), got " + std::to_string(e));
}

// Shared body of the forward and inverse mapping; `sign` = +1 forward, -1 inverse.
//
// arccos(r) with r = (2se + (1+e^2) cos p) / (1 + e^2 + 2se cos p) is evaluated as
// 2 atan2(sqrt(1-r), sqrt(1+r)), where
//   1 - r = (1-se)^2 (1 - cos p) / den,   1 + r = (1+se)^2 (1 + cos p) / den.
// The common denominator cancels and 1 -/+ cos p = 2 sin^2(p/2), 2 cos^2(p/2),
// which keeps full precision near p = 0 and p = 180 where plain acos does not.
double focal_map(double phi_deg, double e, double sign)
{
    check_eccentricity(e);
    const double phi = wrap_deg(phi_deg);
    const double half = 0.5 * deg_to_rad(phi);
    const double se = sign * e;
    const double magnitude = rad_to_deg(2.0 * std::atan2((1.0 - se) * std::abs(std::sin(half)),
                                                         (1.0 + se) * std::cos(half)));
    return phi >= 0.0 ? magnitude : -magnitude;
}

} // namespace

double Ellipse::semi_minor_m() const
{
    return std::sqrt(semi_major_m * semi_major_m - focal_half_distance_m * focal_half_distance_m);
}

Ellipse ellipse_from_delay(double excess_delay_s, double txrx_distance_m, int cluster_index)
{
    if (!(txrx_distance_m > 0.0) || !std::isfinite(txrx_distance_m))
        throw InvalidGeometry("Tx-Rx distance must be positive, got " + std::to_string(txrx_distance_m));
    if (!(excess_delay_s > kDegenerateDelay))
        throw DegenerateEllipse("excess delay " + std::to_string(excess_delay_s) +
                                " s is too short to form an ellipse (cluster " + std::to_string(cluster_index) + ")");

    const double path_length = txrx_distance_m + kSpeedOfLight * excess_delay_s;
    Ellipse el;
    el.semi_major_m = 0.5 * path_length;
    el.focal_half_distance_m = 0.5 * txrx_distance_m;
    el.eccentricity = txrx_distance_m / path_length;
    el.cluster_index = cluster_index;
    return el;
}

double aoa_from_aod(double phi_t_deg, double eccentricity)
{
    return focal_map(phi_t_deg, eccentricity, 1.0);
}

double aod_from_aoa(double phi_r_deg, double eccentricity)
{
    return focal_map(phi_r_deg, eccentricity, -1.0);
}

Point2 tx_focus(const Ellipse &ellipse) { return {ellipse.focal_half_distance_m, 0.0}; }
Point2 rx_focus(const Ellipse &ellipse) { return {-ellipse.focal_half_distance_m, 0.0}; }

Point2 reflection_point(double phi_t_deg, const Ellipse &ellipse)
{
    // Focal polar form about the +x focus: r = a (1 - e^2) / (1 + e cos(theta)).
    const double e = ellipse.eccentricity;
    const double theta = deg_to_rad(phi_t_deg);
    const double r = ellipse.semi_major_m * (1.0 - e * e) / (1.0 + e * std::cos(theta));
    const Point2 tx = tx_focus(ellipse);
    return {tx.x + r * std::cos(theta), tx.y + r * std::sin(theta)};
}

} // namespace multiell
