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

#ifndef MULTIELL_GEOMETRY_HPP
#define MULTIELL_GEOMETRY_HPP

// Confocal ellipses and the departure-to-arrival angle mapping.
//
// Frame: the Tx sits at focus (+D/2, 0), the Rx at focus (-D/2, 0). Both
// angles are measured counter-clockwise from the +x axis at their own focus,
// so an AOD of 0 deg points away from the Rx and an AOA of 0 deg looks from the
// Rx toward the Tx (the direct path). This is the frame in which the mapping
// below is the exact reflection geometry.

namespace multiell {

inline constexpr double kSpeedOfLight = 299'792'458.0; // m/s
inline constexpr double kDegenerateDelay = 1e-10;      // s; shorter excess delays cannot form an ellipse

struct Ellipse {
    double semi_major_m = 0.0;
    double focal_half_distance_m = 0.0;
    double eccentricity = 0.0;
    int cluster_index = 1;

    double semi_minor_m() const;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Ellipse whose foci are the Tx and Rx and whose reflection paths all have
/// total length D + c * excess_delay.
/// Throws DegenerateEllipse when excess_delay <= kDegenerateDelay and
/// InvalidGeometry for a non-positive distance.
Ellipse ellipse_from_delay(double excess_delay_s, double txrx_distance_m, int cluster_index);

/// AOA (deg) of the path leaving the Tx at AOD phi_t_deg and reflecting off an
/// ellipse of eccentricity e in [0, 1). sgn(0) is taken as +1.
double aoa_from_aod(double phi_t_deg, double eccentricity);

/// Inverse of aoa_from_aod.
double aod_from_aoa(double phi_r_deg, double eccentricity);

/// Point where the ray leaving the Tx focus at phi_t_deg meets the ellipse.
Point2 reflection_point(double phi_t_deg, const Ellipse &ellipse);

Point2 tx_focus(const Ellipse &ellipse);
Point2 rx_focus(const Ellipse &ellipse);

} // namespace multiell

#endif
