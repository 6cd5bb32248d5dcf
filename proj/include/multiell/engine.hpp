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

#ifndef MULTIELL_ENGINE_HPP
#define MULTIELL_ENGINE_HPP

#include "multiell/antenna.hpp"
#include "multiell/geometry.hpp"
#include "multiell/pdp.hpp"
#include "multiell/scattering.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace multiell {

struct ScenarioConfig {
    double txrx_distance_m = 200.0;
    double ds_s = 228e-9;
    NormalizedPdp pdp = default_nlos_pdp();
    AntennaPattern tx_pattern;         // boresight = alpha_T
    AntennaPattern rx_pattern;         // boresight = alpha_R
    int paths_per_cluster = 500;
    VonMisesParams local_scattering{0.0, 3.0, std::nullopt};
    std::optional<double> rice_factor_db; // nullopt: NLOS; +inf allowed
    std::uint64_t seed = 1;
    std::string frequency_label;

    // Throws ConfigError on invariant violations.
    void validate() const;
};

struct PathSource {
    enum class Kind { Cluster, LocalScatter, Los };
    Kind kind = Kind::Cluster;
    int cluster_index = 0; // 1-based PDP tap index; 0 unless kind == Cluster

    friend bool operator==(const PathSource &, const PathSource &) = default;
};

struct PathSample {
    double aoa_deg = 0.0;
    double power_lin = 0.0;
    PathSource source;

    friend bool operator==(const PathSample &, const PathSample &) = default;
};

/// One Monte Carlo realization of the path set seen at the Rx, before the Rx
/// antenna is applied. Powers sum to one. Order: ellipse clusters in PDP
/// order, then local scattering, then the direct path.
///
/// Each cluster draws from its own substream of `stream_seed`, so changing
/// the number of paths in one cluster leaves the others untouched. Clusters
/// are sampled in parallel; the result does not depend on the thread count.
std::vector<PathSample> draw_raw_paths(const ScenarioConfig &config, std::uint64_t stream_seed);

// Multiplies every path power by the normalized Rx gain toward its AOA.
void apply_rx_pattern(std::span<PathSample> paths, const AntennaPattern &rx);

// draw_raw_paths followed by apply_rx_pattern(config.rx_pattern).
std::vector<PathSample> run_realization(const ScenarioConfig &config, std::uint64_t stream_seed);

namespace serial {
// Single-threaded reference versions of the kernels above.
std::vector<PathSample> draw_raw_paths(const ScenarioConfig &config, std::uint64_t stream_seed);
std::vector<PathSample> run_realization(const ScenarioConfig &config, std::uint64_t stream_seed);
} // namespace serial

// Substream index used for the local-scattering component.
inline constexpr std::uint64_t kLocalScatterStream = 0x1'0000'0000ULL;

} // namespace multiell

#endif
