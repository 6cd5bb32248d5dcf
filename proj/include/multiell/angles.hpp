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

#ifndef MULTIELL_ANGLES_HPP
#define MULTIELL_ANGLES_HPP

#include <cmath>
#include <numbers>

namespace multiell {

inline constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double deg) noexcept { return deg * (kPi / 180.0); }
constexpr double rad_to_deg(double rad) noexcept { return rad * (180.0 / kPi); }

// Wraps an angle in degrees into (-180, 180].
inline double wrap_deg(double deg) noexcept
{
    double r = std::fmod(deg, 360.0);
    if (r <= -180.0)
        r += 360.0;
    else if (r > 180.0)
        r -= 360.0;
    return r;
}

// Shortest signed arc from `to` to `from`, in (-180, 180].
inline double angular_distance_deg(double from, double to) noexcept { return wrap_deg(from - to); }

} // namespace multiell

#endif
