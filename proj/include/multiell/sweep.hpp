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

#ifndef MULTIELL_SWEEP_HPP
#define MULTIELL_SWEEP_HPP

#include "multiell/engine.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace multiell {

enum class SweepAxis { TxOrientation, RxOrientation };

struct SweepRow {
    double alpha_t_deg = 0.0;
    double alpha_r_deg = 0.0;
    int trial = 0;
    double as_deg = 0.0;

    friend bool operator==(const SweepRow &, const SweepRow &) = default;
};

struct SweepPoint {
    double angle_deg = 0.0;
    double mean_as_deg = 0.0;
    double std_as_deg = 0.0; // sample standard deviation; 0 for a single trial

    friend bool operator==(const SweepPoint &, const SweepPoint &) = default;
};

struct SweepResult {
    std::vector<SweepRow> rows;        // angle-major, trial-minor
    std::vector<SweepPoint> aggregate; // one per swept angle, input order
};

/// Seed of trial `trial` in a sweep along `axis`. It does not depend on the
/// swept angle: every orientation of a trial sees the same random draws, so
/// curves are free of point-to-point sampling noise and an omni Rx gives the
/// same spread at every alpha_R.
std::uint64_t trial_seed(std::uint64_t master_seed, SweepAxis axis, int trial);

/// Angle spread versus Tx or Rx orientation. For each angle and trial the
/// corresponding boresight is overridden, one realization is drawn and its
/// spread is taken about spread_reference_deg(rx). Runs the (angle, trial)
/// grid in parallel; the result is independent of the thread count.
SweepResult sweep_as(const ScenarioConfig &config, SweepAxis axis, std::span<const double> angles_deg, int trials);

// Mean and sample standard deviation per angle, from rows in sweep order.
std::vector<SweepPoint> aggregate_rows(std::span<const SweepRow> rows, SweepAxis axis, int trials);

// Angle spread of one realization of a fully specified configuration.
double realization_spread(const ScenarioConfig &config, std::uint64_t stream_seed);

// Inclusive arithmetic grid from..to with the given step.
std::vector<double> angle_grid(double from_deg, double to_deg, double step_deg);

namespace serial {
SweepResult sweep_as(const ScenarioConfig &config, SweepAxis axis, std::span<const double> angles_deg, int trials);
} // namespace serial

} // namespace multiell

#endif
