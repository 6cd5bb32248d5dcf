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

#include "multiell/engine.hpp"

#include "multiell/angles.hpp"
#include "multiell/error.hpp"

#include <cmath>
#include <string>

namespace multiell {

void ScenarioConfig::validate() const
{
    if (!(txrx_distance_m > 0.0) || !std::isfinite(txrx_distance_m))
        throw ConfigError("txrx_distance_m must be positive");
    if (!(ds_s > 0.0) || !std::isfinite(ds_s))
        throw ConfigError("ds_s must be positive");
    if (paths_per_cluster < 1)
        throw ConfigError("paths_per_cluster must be at least 1");
    if (pdp.taps.empty())
        throw ConfigError("PDP '" + pdp.name + "' has no taps");
    const auto &ls = local_scattering;
    if (!(ls.kappa >= 0.0 && ls.kappa <= kMaxKappa))
        throw ConfigError("local_scattering.kappa must lie in [0, 500]");
    if (ls.power_share && !(*ls.power_share >= 0.0 && *ls.power_share <= 1.0))
        throw ConfigError("local_scattering.power_share must lie in [0, 1]");
    for (const auto *p : {&tx_pattern, &rx_pattern})
        if (p->kind == PatternKind::Gaussian && !(p->hpbw_deg > 0.0 && p->hpbw_deg < 360.0))
            throw ConfigError("antenna HPBW must lie in (0, 360) deg");
    if (rice_factor_db && std::isnan(*rice_factor_db))
        throw ConfigError("rice_factor_db is NaN");
}

namespace {

struct ClusterPlan {
    int index;           // 1-based PDP tap
    double eccentricity;
    double budget;       // raw power carried by the cluster
    std::size_t offset;  // first slot in the output
};

struct RealizationPlan {
    std::vector<ClusterPlan> clusters;
    double scatter_budget = 0.0;
    std::size_t scatter_offset = 0;
    bool has_scatter = false;
    bool has_los = false;
    double los_power = 0.0;
    std::size_t total_paths = 0;
};

RealizationPlan make_plan(const ScenarioConfig &config)
{
    config.validate();
    const ScaledPdp scaled = scale_pdp(config.pdp, config.ds_s);
    const auto n = static_cast<std::size_t>(config.paths_per_cluster);

    RealizationPlan plan;
    double routed = 0.0;
    double ellipse_power = 0.0;
    for (std::size_t i = 0; i < scaled.clusters.size(); ++i) {
        const auto &c = scaled.clusters[i];
        const int index = static_cast<int>(i) + 1;
        if (c.excess_delay_s <= kDegenerateDelay) {
            routed += c.power_lin;
            continue;
        }
        const Ellipse el = ellipse_from_delay(c.excess_delay_s, config.txrx_distance_m, index);
        plan.clusters.push_back({index, el.eccentricity, c.power_lin, 0});
        ellipse_power += c.power_lin;
    }

    double share = config.local_scattering.power_share.value_or(routed);
    if (plan.clusters.empty()) {
        if (config.local_scattering.power_share && share < 1.0)
            throw ConfigError("no PDP tap forms an ellipse, but local_scattering.power_share < 1");
        share = 1.0;
    }

    double scattered = 1.0;
    if (config.rice_factor_db) {
        plan.has_los = true;
        if (std::isinf(*config.rice_factor_db)) {
            scattered = *config.rice_factor_db > 0.0 ? 0.0 : 1.0;
        } else {
            const double k = std::pow(10.0, *config.rice_factor_db / 10.0);
            scattered = 1.0 / (k + 1.0);
        }
        plan.los_power = 1.0 - scattered;
    }

    const double ellipse_scale = plan.clusters.empty() ? 0.0 : (1.0 - share) / ellipse_power;
    std::size_t offset = 0;
    for (auto &cl : plan.clusters) {
        cl.budget *= ellipse_scale * scattered;
        cl.offset = offset;
        offset += n;
    }
    if (share > 0.0) {
        plan.has_scatter = true;
        plan.scatter_budget = share * scattered;
        plan.scatter_offset = offset;
        offset += n;
    }
    plan.total_paths = offset + (plan.has_los ? 1 : 0);
    return plan;
}

// Rescales the raw uniform draws stored in power_lin so they sum to `budget`.
void rescale(std::span<PathSample> paths, double budget)
{
    double sum = 0.0;
    for (const auto &p : paths)
        sum += p.power_lin;
    for (auto &p : paths)
        p.power_lin *= budget / sum;
}

void fill_cluster(const ClusterPlan &cl, const AntennaPattern &tx, const RandomStream &root,
                  std::span<PathSample> out)
{
    RandomStream rng = root.substream(static_cast<std::uint64_t>(cl.index));
    for (auto &p : out) {
        const double aod = sample_aod(tx, rng);
        p.aoa_deg = aoa_from_aod(aod, cl.eccentricity);
        p.power_lin = rng.uniform_open();
        p.source = {PathSource::Kind::Cluster, cl.index};
    }
    rescale(out, cl.budget);
}

void fill_scatter(const RealizationPlan &plan, const VonMisesParams &params, const RandomStream &root,
                  std::span<PathSample> out)
{
    RandomStream rng = root.substream(kLocalScatterStream);
    for (auto &p : out) {
        p.aoa_deg = sample_von_mises(params, rng);
        p.power_lin = rng.uniform_open();
        p.source = {PathSource::Kind::LocalScatter, 0};
    }
    rescale(out, plan.scatter_budget);
}

template <bool Parallel>
std::vector<PathSample> draw_paths_impl(const ScenarioConfig &config, std::uint64_t stream_seed)
{
    const RealizationPlan plan = make_plan(config);
    const RandomStream root(stream_seed);
    const auto n = static_cast<std::size_t>(config.paths_per_cluster);
    std::vector<PathSample> paths(plan.total_paths);
    const std::span<PathSample> all(paths);

    const auto count = static_cast<std::ptrdiff_t>(plan.clusters.size());
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            const auto &cl = plan.clusters[static_cast<std::size_t>(i)];
            fill_cluster(cl, config.tx_pattern, root, all.subspan(cl.offset, n));
        }
    } else {
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            const auto &cl = plan.clusters[static_cast<std::size_t>(i)];
            fill_cluster(cl, config.tx_pattern, root, all.subspan(cl.offset, n));
        }
    }

    if (plan.has_scatter)
        fill_scatter(plan, config.local_scattering, root, all.subspan(plan.scatter_offset, n));
    if (plan.has_los)
        paths.back() = {0.0, plan.los_power, {PathSource::Kind::Los, 0}};
    return paths;
}

} // namespace

std::vector<PathSample> draw_raw_paths(const ScenarioConfig &config, std::uint64_t stream_seed)
{
    return draw_paths_impl<true>(config, stream_seed);
}

void apply_rx_pattern(std::span<PathSample> paths, const AntennaPattern &rx)
{
    if (rx.kind == PatternKind::Omni)
        return;
    for (auto &p : paths)
        p.power_lin *= power_gain(rx, p.aoa_deg);
}

std::vector<PathSample> run_realization(const ScenarioConfig &config, std::uint64_t stream_seed)
{
    auto paths = draw_raw_paths(config, stream_seed);
    apply_rx_pattern(paths, config.rx_pattern);
    return paths;
}

namespace serial {

std::vector<PathSample> draw_raw_paths(const ScenarioConfig &config, std::uint64_t stream_seed)
{
    return draw_paths_impl<false>(config, stream_seed);
}

std::vector<PathSample> run_realization(const ScenarioConfig &config, std::uint64_t stream_seed)
{
    auto paths = serial::draw_raw_paths(config, stream_seed);
    apply_rx_pattern(paths, config.rx_pattern);
    return paths;
}

} // namespace serial

} // namespace multiell
