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

#include "multiell/antenna.hpp"

#include "multiell/angles.hpp"
#include "multiell/error.hpp"

#include <cmath>

namespace multiell {

AntennaPattern AntennaPattern::omni(double boresight_deg)
{
    AntennaPattern p;
    p.boresight_deg = wrap_deg(boresight_deg);
    return p;
}

AntennaPattern AntennaPattern::gaussian(double hpbw_deg, double gain_dbi, double boresight_deg)
{
    sigma_from_hpbw(hpbw_deg); // validates
    AntennaPattern p;
    p.kind = PatternKind::Gaussian;
    p.gain_dbi = gain_dbi;
    p.hpbw_deg = hpbw_deg;
    p.boresight_deg = wrap_deg(boresight_deg);
    return p;
}

AntennaPattern AntennaPattern::pointed_at(double boresight) const
{
    AntennaPattern p = *this;
    p.boresight_deg = wrap_deg(boresight);
    return p;
}

double sigma_from_hpbw(double hpbw_deg)
{
    if (!(hpbw_deg > 0.0 && hpbw_deg < 360.0))
        throw InvalidHpbw("HPBW must lie in (0, 360) deg, got " + std::to_string(hpbw_deg));
    return hpbw_deg / (2.0 * std::sqrt(2.0 * std::log(2.0)));
}

double power_gain(const AntennaPattern &pattern, double phi_deg)
{
    if (pattern.kind == PatternKind::Omni)
        return 1.0;
    const double sigma = sigma_from_hpbw(pattern.hpbw_deg);
    const double delta = angular_distance_deg(phi_deg, pattern.boresight_deg);
    return std::exp(-delta * delta / (2.0 * sigma * sigma));
}

double sample_aod(const AntennaPattern &pattern, RandomStream &rng)
{
    if (pattern.kind == PatternKind::Omni)
        return 180.0 - 360.0 * rng.uniform();

    // Normal about boresight, truncated to +-180 deg by rejection.
    const double sigma = sigma_from_hpbw(pattern.hpbw_deg);
    double offset;
    do {
        offset = sigma * rng.normal();
    } while (std::abs(offset) > 180.0);
    return wrap_deg(pattern.boresight_deg + offset);
}

std::optional<AntennaPreset> find_antenna_preset(std::string_view name)
{
    for (const auto &p : kAntennaPresets)
        if (p.name == name)
            return p;
    return std::nullopt;
}

AntennaPattern pattern_from_preset(const AntennaPreset &preset, double boresight_deg)
{
    return AntennaPattern::gaussian(preset.hpbw_deg, preset.gain_dbi, boresight_deg);
}

} // namespace multiell
