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

#ifndef MULTIELL_PDP_HPP
#define MULTIELL_PDP_HPP

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace multiell {

struct PdpTap {
    double normalized_delay = 0.0; // multiples of the delay spread
    double power_db = 0.0;
};

// Tapped delay profile with delays normalized to the rms delay spread.
struct NormalizedPdp {
    std::string name;
    std::vector<PdpTap> taps; // ascending delay
};

struct ScaledCluster {
    double excess_delay_s = 0.0;
    double power_lin = 0.0;
};

// Profile after delay-spread scaling; powers sum to one.
struct ScaledPdp {
    std::vector<ScaledCluster> clusters;
    double ds_s = 0.0;
};

/// Reads the plain-text profile format:
///
///     # name: <label>
///     # any other comment
///     <normalized_delay> <power_db>
///
/// Throws ParseError (with line number), UnsortedDelays or EmptyProfile.
NormalizedPdp load_pdp(const std::filesystem::path &path);
NormalizedPdp parse_pdp(std::istream &in);

// Writes `pdp` in the format accepted by parse_pdp.
void write_pdp(std::ostream &out, const NormalizedPdp &pdp);

/// Multiplies every normalized delay by `ds_s` and converts powers to linear
/// scale normalized to unit sum. Throws InvalidDs unless ds_s > 0.
ScaledPdp scale_pdp(const NormalizedPdp &pdp, double ds_s);

/// Default NLOS profile: 3GPP TR 38.901 (V14.2.0) Table 7.7.2-2, TDL-B,
/// with taps listed in ascending delay order.
const NormalizedPdp &default_nlos_pdp();

} // namespace multiell

#endif
