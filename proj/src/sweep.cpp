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

#include "multiell/sweep.hpp"

#include "multiell/error.hpp"
#include "multiell/random.hpp"
#include "multiell/stats.hpp"

#include <cmath>

namespace multiell {

namespace {

ScenarioConfig oriented(const ScenarioConfig &config, SweepAxis axis, double angle)
{
    ScenarioConfig c = config;
    if (axis == SweepAxis::TxOrientation)
        c.tx_pattern = c.tx_pattern.pointed_at(angle);
    else
        c.rx_pattern = c.rx_pattern.pointed_at(angle);
    return c;
}

void check_sweep(const ScenarioConfig &config, std::span<const double> angles, int trials)
{
    if (angles.empty())
        throw ConfigError("sweep needs at least one angle");
    if (trials < 1)
        throw ConfigError("sweep needs at least one trial");
    config.validate();
}

template <bool Parallel>
SweepResult sweep_impl(const ScenarioConfig &config, SweepAxis axis, std::span<const double> angles, int trials)
{
    check_sweep(config, angles, trials);
    const auto t = static_cast<std::size_t>(trials);
    const auto total = static_cast<std::ptrdiff_t>(angles.size() * t);

    SweepResult result;
    result.rows.resize(static_cast<std::size_t>(total));

    auto point = [&](std::ptrdiff_t k) {
        const auto idx = static_cast<std::size_t>(k);
        const double angle = angles[idx / t];
        const int trial = static_cast<int>(idx % t);
        const ScenarioConfig c = oriented(config, axis, angle);
        const auto seed = trial_seed(config.seed, axis, trial);
        const auto paths = Parallel ? run_realization(c, seed) : serial::run_realization(c, seed);
        SweepRow &row = result.rows[idx];
        row.alpha_t_deg = axis == SweepAxis::TxOrientation ? angle : config.tx_pattern.boresight_deg;
        row.alpha_r_deg = axis == SweepAxis::RxOrientation ? angle : config.rx_pattern.boresight_deg;
        row.trial = trial;
        row.as_deg = angular_spread_about(paths, spread_reference_deg(c.rx_pattern));
    };

    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t k = 0; k < total; ++k)
            point(k);
    } else {
        for (std::ptrdiff_t k = 0; k < total; ++k)
            point(k);
    }

    result.aggregate = aggregate_rows(result.rows, axis, trials);
    return result;
}

} // namespace

std::uint64_t trial_seed(std::uint64_t master_seed, SweepAxis axis, int trial)
{
    const std::uint64_t axis_tag = axis == SweepAxis::TxOrientation ? 0x7478 : 0x7278;
    return derive_seed(derive_seed(master_seed, axis_tag), static_cast<std::uint64_t>(trial));
}

std::vector<SweepPoint> aggregate_rows(std::span<const SweepRow> rows, SweepAxis axis, int trials)
{
    const auto t = static_cast<std::size_t>(trials);
    std::vector<SweepPoint> out;
    out.reserve(rows.size() / t);
    for (std::size_t start = 0; start + t <= rows.size(); start += t) {
        const auto group = rows.subspan(start, t);
        double mean = 0.0;
        for (const auto &r : group)
            mean += r.as_deg;
        mean /= static_cast<double>(t);
        double ss = 0.0;
        for (const auto &r : group)
            ss += (r.as_deg - mean) * (r.as_deg - mean);
        const double sd = t > 1 ? std::sqrt(ss / static_cast<double>(t - 1)) : 0.0;
        const auto &first = group.front();
        out.push_back({axis == SweepAxis::TxOrientation ? first.alpha_t_deg : first.alpha_r_deg, mean, sd});
    }
    return out;
}

double realization_spread(const ScenarioConfig &config, std::uint64_t stream_seed)
{
    const auto paths = run_realization(config, stream_seed);
    return angular_spread_about(paths, spread_reference_deg(config.rx_pattern));
}

std::vector<double> angle_grid(double from_deg, double to_deg, double step_deg)
{
    if (!(step_deg > 0.0) || !std::isfinite(step_deg))
        throw ConfigError("sweep step must be positive");
    if (!(to_deg >= from_deg))
        throw ConfigError("sweep range must satisfy from <= to");
    const auto count = static_cast<std::size_t>(std::floor((to_deg - from_deg) / step_deg + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i)
        grid[i] = from_deg + static_cast<double>(i) * step_deg;
    return grid;
}

SweepResult sweep_as(const ScenarioConfig &config, SweepAxis axis, std::span<const double> angles_deg, int trials)
{
    return sweep_impl<true>(config, axis, angles_deg, trials);
}

namespace serial {

SweepResult sweep_as(const ScenarioConfig &config, SweepAxis axis, std::span<const double> angles_deg, int trials)
{
    return sweep_impl<false>(config, axis, angles_deg, trials);
}

} // namespace serial

} // namespace multiell
