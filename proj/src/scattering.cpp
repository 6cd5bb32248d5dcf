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

#include "multiell/scattering.hpp"

#include "multiell/angles.hpp"
#include "multiell/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace multiell {

namespace {

void check_kappa(double kappa)
{
    if (!(kappa >= 0.0 && kappa <= kMaxKappa))
        throw KappaOutOfRange("kappa must lie in [0, " + std::to_string(kMaxKappa) + "], got " +
                              std::to_string(kappa));
}

} // namespace

double bessel_i0(double x)
{
    // sum_k ((x/2)^(2k)) / (k!)^2; all terms positive, so no cancellation.
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 2000; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < sum * 1e-17)
            break;
    }
    return sum;
}

double von_mises_pdf(double phi_deg, const VonMisesParams &params)
{
    check_kappa(params.kappa);
    const double d = deg_to_rad(angular_distance_deg(phi_deg, params.mu_deg));
    return std::exp(params.kappa * std::cos(d)) / (2.0 * kPi * bessel_i0(params.kappa));
}

double sample_von_mises(const VonMisesParams &params, RandomStream &rng)
{
    check_kappa(params.kappa);
    if (params.kappa < 1e-8)
        return 180.0 - 360.0 * rng.uniform();

    const double kappa = params.kappa;
    const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
    const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
    const double r = (1.0 + rho * rho) / (2.0 * rho);

    double f;
    for (;;) {
        const double u1 = rng.uniform_open();
        const double u2 = rng.uniform_open();
        const double z = std::cos(kPi * u1);
        f = (1.0 + r * z) / (r + z);
        const double c = kappa * (r - f);
        if (c * (2.0 - c) - u2 > 0.0 || std::log(c / u2) + 1.0 - c >= 0.0)
            break;
    }
    const double u3 = rng.uniform();
    const double theta = rad_to_deg(std::acos(std::clamp(f, -1.0, 1.0)));
    return wrap_deg(params.mu_deg + (u3 < 0.5 ? -theta : theta));
}

} // namespace multiell
