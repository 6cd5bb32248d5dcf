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

#include "multiell/angles.hpp"
#include "multiell/engine.hpp"
#include "multiell/error.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

using namespace multiell;

namespace {

// One tap whose ellipse has eccentricity 0.5 at D = 200 m.
ScenarioConfig single_cluster(int paths)
{
    ScenarioConfig c;
    c.pdp = NormalizedPdp{"one", {{1.0, 0.0}}};
    c.ds_s = 200.0 / kSpeedOfLight;
    c.paths_per_cluster = paths;
    c.local_scattering.power_share = 0.0;
    return c;
}

double raw_total(const std::vector<PathSample> &paths)
{
    double s = 0.0;
    for (const auto &p : paths)
        s += p.power_lin;
    return s;
}

ScenarioConfig random_config(RandomStream &rng)
{
    ScenarioConfig c;
    c.txrx_distance_m = rng.uniform(10.0, 2000.0);
    c.ds_s = rng.uniform(10e-9, 1e-6);
    c.paths_per_cluster = 1 + static_cast<int>(rng.uniform() * 200.0);
    auto pattern = [&rng] {
        const double bore = 180.0 - 360.0 * rng.uniform();
        return rng.uniform() < 0.3 ? AntennaPattern::omni(bore)
                                   : AntennaPattern::gaussian(rng.uniform(1.0, 120.0), 10.0, bore);
    };
    c.tx_pattern = pattern();
    c.rx_pattern = pattern();
    c.local_scattering.kappa = rng.uniform(0.0, 50.0);
    c.local_scattering.mu_deg = rng.uniform(-180.0, 180.0);
    const double u = rng.uniform();
    if (u < 0.3)
        c.local_scattering.power_share = rng.uniform();
    else if (u < 0.4)
        c.local_scattering.power_share = 0.0;
    if (rng.uniform() < 0.5)
        c.rice_factor_db = rng.uniform(-20.0, 20.0);
    return c;
}

} // namespace

TEST_CASE("config validation")
{
    ScenarioConfig c;
    CHECK_NOTHROW(c.validate());
    auto bad = [](auto mutate) {
        ScenarioConfig x;
        mutate(x);
        return x;
    };
    CHECK_THROWS_AS(bad([](auto &x) { x.txrx_distance_m = 0.0; }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &x) { x.ds_s = -1.0; }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &x) { x.paths_per_cluster = 0; }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &x) { x.pdp.taps.clear(); }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &x) { x.local_scattering.kappa = 600.0; }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &x) { x.local_scattering.power_share = 1.5; }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &x) { x.rice_factor_db = std::nan(""); }).validate(), ConfigError);
    CHECK_THROWS_AS(draw_raw_paths(bad([](auto &x) { x.ds_s = 0.0; }), 1), ConfigError);
}

TEST_CASE("path set layout")
{
    ScenarioConfig c;
    c.paths_per_cluster = 50;
    c.rice_factor_db = 3.0;
    const auto paths = draw_raw_paths(c, 5);
    // The first TDL-B tap has zero delay and goes to local scattering.
    const std::size_t ellipses = c.pdp.taps.size() - 1;
    REQUIRE(paths.size() == ellipses * 50 + 50 + 1);
    for (std::size_t i = 0; i < ellipses * 50; ++i) {
        CHECK(paths[i].source.kind == PathSource::Kind::Cluster);
        CHECK(paths[i].source.cluster_index == static_cast<int>(i / 50) + 2);
    }
    for (std::size_t i = ellipses * 50; i < ellipses * 50 + 50; ++i)
        CHECK(paths[i].source.kind == PathSource::Kind::LocalScatter);
    CHECK(paths.back().source.kind == PathSource::Kind::Los);
    CHECK(paths.back().aoa_deg == 0.0);
    for (const auto &p : paths) {
        CHECK(p.aoa_deg > -180.0);
        CHECK(p.aoa_deg <= 180.0);
        CHECK(p.power_lin >= 0.0);
        CHECK(std::isfinite(p.power_lin));
    }
}

TEST_CASE("power budgets")
{
    SUBCASE("automatic share equals the zero-delay tap power")
    {
        ScenarioConfig c;
        c.paths_per_cluster = 40;
        const auto paths = draw_raw_paths(c, 9);
        const auto scaled = scale_pdp(c.pdp, c.ds_s);
        double scatter = 0.0;
        for (const auto &p : paths)
            if (p.source.kind == PathSource::Kind::LocalScatter)
                scatter += p.power_lin;
        CHECK(scatter == doctest::Approx(scaled.clusters[0].power_lin).epsilon(1e-12));
        // Every other cluster keeps its profile power.
        for (std::size_t k = 1; k < scaled.clusters.size(); ++k) {
            double s = 0.0;
            for (const auto &p : paths)
                if (p.source.kind == PathSource::Kind::Cluster && p.source.cluster_index == static_cast<int>(k) + 1)
                    s += p.power_lin;
            CHECK(s == doctest::Approx(scaled.clusters[k].power_lin).epsilon(1e-12));
        }
    }
    SUBCASE("Rice factor splits LOS and scattered power")
    {
        ScenarioConfig c;
        c.paths_per_cluster = 20;
        c.rice_factor_db = 10.0;
        const auto paths = draw_raw_paths(c, 2);
        CHECK(paths.back().power_lin == doctest::Approx(10.0 / 11.0).epsilon(1e-14));
        CHECK(raw_total(paths) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("infinite Rice factor")
    {
        ScenarioConfig c;
        c.paths_per_cluster = 20;
        c.rice_factor_db = std::numeric_limits<double>::infinity();
        const auto paths = draw_raw_paths(c, 2);
        CHECK(paths.back().power_lin / raw_total(paths) > 0.999);
    }
    SUBCASE("only degenerate taps")
    {
        ScenarioConfig c;
        c.pdp = NormalizedPdp{"los-only", {{0.0, 0.0}}};
        c.paths_per_cluster = 30;
        const auto paths = draw_raw_paths(c, 1);
        CHECK(paths.size() == 30);
        CHECK(raw_total(paths) == doctest::Approx(1.0).epsilon(1e-12));
        c.local_scattering.power_share = 0.5;
        CHECK_THROWS_AS(draw_raw_paths(c, 1), ConfigError);
    }
    SUBCASE("conservation over random configs")
    {
        RandomStream rng(424242);
        for (int i = 0; i < 100; ++i) {
            const ScenarioConfig c = random_config(rng);
            CHECK(std::abs(raw_total(draw_raw_paths(c, static_cast<std::uint64_t>(i))) - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("determinism and serial reference")
{
    RandomStream rng(77);
    for (int i = 0; i < 20; ++i) {
        const ScenarioConfig c = random_config(rng);
        const auto a = run_realization(c, 1234);
        CHECK(a == run_realization(c, 1234));
        CHECK(a == serial::run_realization(c, 1234));
        CHECK(draw_raw_paths(c, 1234) == serial::draw_raw_paths(c, 1234));
    }
    ScenarioConfig c;
    c.paths_per_cluster = 10;
    CHECK(run_realization(c, 1) != run_realization(c, 2));
}

TEST_CASE("clusters draw from independent substreams")
{
    ScenarioConfig a;
    a.paths_per_cluster = 30;
    ScenarioConfig b = a;
    // Dropping the last tap leaves earlier clusters' directions untouched.
    b.pdp.taps.pop_back();
    const auto pa = draw_raw_paths(a, 3);
    const auto pb = draw_raw_paths(b, 3);
    for (std::size_t i = 0; i < 30 * 5; ++i)
        CHECK(pa[i].aoa_deg == pb[i].aoa_deg);
}

TEST_CASE("omni Rx orientation does not matter")
{
    ScenarioConfig c;
    c.paths_per_cluster = 50;
    c.tx_pattern = AntennaPattern::gaussian(20.0, 20.0, 180.0);
    const auto ref = run_realization(c, 8);
    for (double alpha_r : {-135.0, -45.0, 0.0, 45.0, 180.0}) {
        c.rx_pattern = AntennaPattern::omni(alpha_r);
        CHECK(run_realization(c, 8) == ref);
    }
}

TEST_CASE("narrower Rx beam never adds power")
{
    ScenarioConfig c;
    c.paths_per_cluster = 100;
    for (double bore : {0.0, 40.0, 180.0}) {
        c.rx_pattern = AntennaPattern::gaussian(30.0, 0.0, bore);
        const auto wide = run_realization(c, 4);
        c.rx_pattern = AntennaPattern::gaussian(12.0, 0.0, bore);
        const auto narrow = run_realization(c, 4);
        REQUIRE(wide.size() == narrow.size());
        for (std::size_t i = 0; i < wide.size(); ++i)
            CHECK(narrow[i].power_lin <= wide[i].power_lin);
    }
}

TEST_CASE("omni single cluster follows the pushforward of a uniform AOD")
{
    const int n = 100000;
    const double bin = 5.0;
    const int nbins = 72;
    const auto paths = run_realization(single_cluster(n), 2024);

    std::vector<double> hist(nbins, 0.0);
    for (const auto &p : paths)
        hist[static_cast<std::size_t>(std::clamp(static_cast<int>(std::ceil((p.aoa_deg + 180.0) / bin)) - 1, 0,
                                                 nbins - 1))] += p.power_lin;

    // Brute force: push a fine uniform AOD grid through the reflection
    // construction and read the angle off at the Rx focus.
    const Ellipse el = ellipse_from_delay(200.0 / kSpeedOfLight, 200.0, 1);
    const int m = 720000;
    std::vector<double> oracle(nbins, 0.0);
    for (int k = 0; k < m; ++k) {
        const double aod = -180.0 + (k + 0.5) * 360.0 / m;
        const Point2 q = reflection_point(aod, el);
        const Point2 rx = rx_focus(el);
        const double aoa = rad_to_deg(std::atan2(q.y - rx.y, q.x - rx.x));
        oracle[static_cast<std::size_t>(std::clamp(static_cast<int>(std::ceil((aoa + 180.0) / bin)) - 1, 0,
                                                   nbins - 1))] += 1.0 / m;
    }
    double tv = 0.0;
    for (int k = 0; k < nbins; ++k)
        tv += std::abs(hist[static_cast<std::size_t>(k)] - oracle[static_cast<std::size_t>(k)]);
    CHECK(0.5 * tv < 0.02);
}
