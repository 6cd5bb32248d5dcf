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

// Serial reference versus OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include "multiell/engine.hpp"
#include "multiell/sweep.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace multiell;

ScenarioConfig antenna_a(double alpha_t)
{
    ScenarioConfig c;
    c.tx_pattern = AntennaPattern::gaussian(20.0, 20.0, alpha_t);
    c.rx_pattern = AntennaPattern::gaussian(20.0, 20.0, 0.0);
    c.local_scattering.kappa = 20.0;
    return c;
}

void BM_RealizationSerial(benchmark::State &state)
{
    ScenarioConfig c = antenna_a(180.0);
    c.paths_per_cluster = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(serial::run_realization(c, ++seed));
    state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<std::int64_t>(c.pdp.taps.size()));
}

void BM_RealizationParallel(benchmark::State &state)
{
    ScenarioConfig c = antenna_a(180.0);
    c.paths_per_cluster = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_realization(c, ++seed));
    state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<std::int64_t>(c.pdp.taps.size()));
}

void BM_SweepSerial(benchmark::State &state)
{
    const ScenarioConfig c = antenna_a(180.0);
    const auto angles = angle_grid(-180.0, 180.0, static_cast<double>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(serial::sweep_as(c, SweepAxis::RxOrientation, angles, 10));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(angles.size()) * 10);
}

void BM_SweepParallel(benchmark::State &state)
{
    const ScenarioConfig c = antenna_a(180.0);
    const auto angles = angle_grid(-180.0, 180.0, static_cast<double>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_as(c, SweepAxis::RxOrientation, angles, 10));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(angles.size()) * 10);
}

} // namespace

BENCHMARK(BM_RealizationSerial)->Arg(500)->Arg(5000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RealizationParallel)->Arg(500)->Arg(5000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SweepSerial)->Arg(3)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(3)->Arg(15)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
