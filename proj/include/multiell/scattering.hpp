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

#ifndef MULTIELL_SCATTERING_HPP
#define MULTIELL_SCATTERING_HPP

#include "multiell/random.hpp"

#include <optional>

namespace multiell {

inline constexpr double kMaxKappa = 500.0;

/// Local scattering around the receiver: a von Mises AOA distribution.
/// power_share is the fraction of the scattered power it carries; nullopt
/// means "the power of the clusters too short to form an ellipse".
struct VonMisesParams {
    double mu_deg = 0.0;
    double kappa = 3.0;
    std::optional<double> power_share;
};

// Modified Bessel function I0 by its power series.
double bessel_i0(double x);

// Density per radian. Throws KappaOutOfRange for kappa outside [0, 500].
double von_mises_pdf(double phi_deg, const VonMisesParams &params);

// Draw in (-180, 180]. Best-Fisher rejection with a wrapped-Cauchy envelope.
double sample_von_mises(const VonMisesParams &params, RandomStream &rng);

} // namespace multiell

#endif
