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

#ifndef MULTIELL_ANTENNA_HPP
#define MULTIELL_ANTENNA_HPP

#include "multiell/random.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace multiell {

enum class PatternKind { Omni, Gaussian };

/// Azimuth power pattern of one antenna.
///
/// The Gaussian shape is applied to power, so the pattern is 1/2 at
/// boresight +- hpbw/2. gain_dbi is descriptive only: the Tx pattern shapes
/// the AOD density, the Rx pattern scales path powers by its normalized gain,
/// and an absolute gain would scale every path alike.
struct AntennaPattern {
    PatternKind kind = PatternKind::Omni;
    double gain_dbi = 0.0;
    double hpbw_deg = 360.0;
    double boresight_deg = 0.0;

    static AntennaPattern omni(double boresight_deg = 0.0);
    // Throws InvalidHpbw unless 0 < hpbw_deg < 360.
    static AntennaPattern gaussian(double hpbw_deg, double gain_dbi = 0.0, double boresight_deg = 0.0);

    AntennaPattern pointed_at(double boresight) const;
    bool is_directional() const { return kind == PatternKind::Gaussian; }
};

// Standard deviation (deg) of the Gaussian whose power falls to 1/2 at +- hpbw/2.
double sigma_from_hpbw(double hpbw_deg);

// Normalized power gain in (0, 1]; 1 at boresight.
double power_gain(const AntennaPattern &pattern, double phi_deg);

// AOD draw from the pattern-shaped density, in (-180, 180].
double sample_aod(const AntennaPattern &pattern, RandomStream &rng);

// Horn antennas of the 6 / 60 GHz comparison.
struct AntennaPreset {
    std::string_view name;
    std::string_view model;
    std::string_view band;
    double gain_dbi;
    double hpbw_deg;
};

inline constexpr std::array<AntennaPreset, 4> kAntennaPresets{{
    {"A", "PE9881-20", "60GHz", 20.0, 20.0},
    {"B", "PE9881-24", "60GHz", 24.0, 12.0},
    {"C", "ATH6G18", "6GHz", 19.0, 18.0},
    {"D", "ATH800M6G", "6GHz", 22.0, 9.0},
}};

std::optional<AntennaPreset> find_antenna_preset(std::string_view name);
AntennaPattern pattern_from_preset(const AntennaPreset &preset, double boresight_deg = 0.0);

} // namespace multiell

#endif
