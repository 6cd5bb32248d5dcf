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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "multiell/angles.hpp"
#include "multiell/geometry.hpp"
#include "multiell/stats.hpp"
#include "multiell/sweep.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace multiell;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::array<char, 4> kAntennas{'A', 'B', 'C', 'D'};

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string &title, const Outcome &o)
{
    std::printf("%s criterion %2d: %s | %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass)
        ++failures;
}

std::string fmt(double v, int decimals = 2)
{
    return cli::format_fixed(v, decimals);
}

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

ScenarioConfig preset_scenario(const std::string &name)
{
    cli::RunManifest m;
    m.preset = name;
    return cli::to_scenario(cli::resolve_config(m, nullptr));
}

double reflection_aoa(double phi_t, double e)
{
    Ellipse el;
    el.semi_major_m = 100.0;
    el.focal_half_distance_m = 100.0 * e;
    el.eccentricity = e;
    const Point2 p = reflection_point(phi_t, el);
    const Point2 rx = rx_focus(el);
    return rad_to_deg(std::atan2(p.y - rx.y, p.x - rx.x));
}

// Alpha_R sweep with the Tx at 180 deg, shared by several criteria.
struct RxSweeps {
    std::vector<double> angles = angle_grid(-180.0, 180.0, 3.0);
    std::array<SweepResult, 4> result;
    std::array<double, 4> seconds{};

    RxSweeps()
    {
        for (std::size_t i = 0; i < kAntennas.size(); ++i) {
            const ScenarioConfig c = preset_scenario(std::string("fig6-") + kAntennas[i]);
            const auto t0 = Clock::now();
            result[i] = sweep_as(c, SweepAxis::RxOrientation, angles, 10);
            seconds[i] = seconds_since(t0);
        }
    }

    double mean_at(std::size_t antenna, double angle) const
    {
        for (const auto &p : result[antenna].aggregate)
            if (p.angle_deg == angle)
                return p.mean_as_deg;
        return std::nan("");
    }
};

Outcome geometric_oracle()
{
    RandomStream rng(1);
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double e = rng.uniform(0.0, 0.99);
        const double phi = 180.0 - 360.0 * rng.uniform();
        worst = std::max(worst, std::abs(angular_distance_deg(aoa_from_aod(phi, e), reflection_aoa(phi, e))));
    }
    const double s = seconds_since(t0);
    return {worst < 1e-9 && s < 1.0, "max error " + sci(worst) + " deg, " + fmt(s, 4) + " s"};
}

Outcome analytic_spread()
{
    double worst = 0.0;
    for (double theta : {1.0, 30.0, 90.0, 179.0}) {
        const std::vector<PathSample> v{{theta, 1.0, {}}, {-theta, 1.0, {}}};
        worst = std::max(worst, std::abs(angular_spread(v) - theta));
    }
    RandomStream rng(2);
    std::vector<PathSample> u(1000000);
    for (auto &p : u)
        p = {180.0 - 360.0 * rng.uniform(), 1.0, {}};
    const double as = angular_spread(u);
    return {worst < 1e-9 && std::abs(as - 103.92304845413264) <= 0.2,
            "two-delta max error " + sci(worst) + " deg, uniform " + fmt(as, 3) + " deg"};
}

Outcome plateau(const RxSweeps &sw)
{
    constexpr std::array<double, 4> target{10.3, 6.2, 9.3, 4.6};
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < 4; ++i) {
        double sum = 0.0;
        int n = 0;
        for (const auto &p : sw.result[i].aggregate)
            if (std::abs(p.angle_deg) > 60.0) {
                sum += p.mean_as_deg;
                ++n;
            }
        const double mean = sum / n;
        const bool pass = std::abs(mean - target[i]) <= 2.0 && sw.seconds[i] < 60.0;
        ok = ok && pass;
        detail += std::string(detail.empty() ? "" : ", ") + kAntennas[i] + " " + fmt(mean) + " (target " +
                  fmt(target[i], 1) + ", " + fmt(sw.seconds[i], 1) + " s)";
    }
    return {ok, detail};
}

Outcome boresight_minima()
{
    std::array<double, 4> as{};
    const std::vector<double> zero{0.0};
    for (std::size_t i = 0; i < 4; ++i) {
        const ScenarioConfig c = preset_scenario(std::string("fig3-") + kAntennas[i]);
        as[i] = sweep_as(c, SweepAxis::TxOrientation, zero, 10).aggregate[0].mean_as_deg;
    }
    const bool ok = std::all_of(as.begin(), as.end(), [](double v) { return v <= 3.0; }) && as[1] < as[0] &&
                    as[3] < as[2];
    return {ok, "A " + fmt(as[0]) + ", B " + fmt(as[1]) + ", C " + fmt(as[2]) + ", D " + fmt(as[3]) +
                    " (targets 1.5, 0.9, 1.8, 0.9; need <= 3, B < A, D < C)"};
}

Outcome back_to_back_minimum(const RxSweeps &sw)
{
    constexpr std::array<double, 4> target{6.0, 4.7, 5.8, 3.9};
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < 4; ++i) {
        const double v = sw.mean_at(i, 0.0);
        ok = ok && std::abs(v - target[i]) <= 2.5;
        detail += std::string(detail.empty() ? "" : ", ") + kAntennas[i] + " " + fmt(v) + " (target " +
                  fmt(target[i], 1) + ")";
    }
    return {ok, detail};
}

Outcome omni_rx_frequency()
{
    constexpr std::array<double, 4> target{28.9, 21.5, 35.8, 29.6};
    const std::array<std::string, 4> presets{"fig4-A-omni", "fig4-B-omni", "fig5-C-omni", "fig5-D-omni"};
    std::array<double, 4> as{};
    const std::vector<double> zero{0.0};
    for (std::size_t i = 0; i < 4; ++i)
        as[i] = sweep_as(preset_scenario(presets[i]), SweepAxis::RxOrientation, zero, 10).aggregate[0].mean_as_deg;
    const bool ordered = as[2] > as[0] && as[3] > as[1];
    bool within = true;
    std::string detail;
    for (std::size_t i = 0; i < 4; ++i) {
        within = within && std::abs(as[i] - target[i]) <= 0.3 * target[i];
        detail += std::string(detail.empty() ? "" : ", ") + kAntennas[i] + " " + fmt(as[i]) + " (target " +
                  fmt(target[i], 1) + ")";
    }
    detail += ordered ? "; ordering C > A, D > B holds" : "; ordering C > A, D > B violated";
    detail += within ? "; all within 30%" : "; not all within 30%";
    return {ordered && within, detail};
}

Outcome single_extremum(const RxSweeps &sw)
{
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<double> x, y;
        for (const auto &p : sw.result[i].aggregate)
            if (p.angle_deg > 0.0 && p.angle_deg < 180.0) {
                x.push_back(p.angle_deg);
                y.push_back(p.mean_as_deg);
            }
        std::vector<double> s = y;
        for (std::size_t k = 1; k + 1 < y.size(); ++k) {
            std::array<double, 3> w{y[k - 1], y[k], y[k + 1]};
            std::sort(w.begin(), w.end());
            s[k] = w[1];
        }
        std::vector<double> maxima;
        for (std::size_t k = 1; k + 1 < s.size(); ++k)
            if (s[k] > s[k - 1] && s[k] >= s[k + 1])
                maxima.push_back(x[k]);
        const bool pass = maxima.size() == 1 && maxima[0] >= 25.0 && maxima[0] <= 55.0;
        ok = ok && pass;
        const auto top = std::max_element(s.begin(), s.end()) - s.begin();
        std::string at;
        for (std::size_t k = 0; k < maxima.size() && k < 6; ++k)
            at += (k ? " " : "") + fmt(maxima[k], 0);
        if (maxima.size() > 6)
            at += " ...";
        detail += std::string(detail.empty() ? "" : "; ") + kAntennas[i] + ": " + std::to_string(maxima.size()) +
                  " maxima at [" + at + "], highest at " + fmt(x[static_cast<std::size_t>(top)], 0);
    }
    return {ok, detail};
}

Outcome omni_invariance()
{
    const ScenarioConfig c = preset_scenario("fig4-A-omni");
    const auto angles = angle_grid(-180.0, 180.0, 3.0);
    const int trials = 5;
    const auto r = sweep_as(c, SweepAxis::RxOrientation, angles, trials);
    bool ok = true;
    for (std::size_t k = 0; k < r.rows.size(); ++k)
        ok = ok && r.rows[k].as_deg == r.rows[k % trials].as_deg;
    return {ok, std::to_string(angles.size()) + " angles x " + std::to_string(trials) + " trials compared bitwise"};
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome cli_determinism()
{
    const fs::path dir = fs::temp_directory_path() / ("multiell_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::array<std::string, 4> commands{
        "sweep --preset fig6-B --step 5 --trials 4 --seed 7",
        "sweep --preset fig2-C-omni --step 10 --seed 7 --set los.rice_factor_db=3",
        "pas --preset fig6-A --trials 2 --bin-width 2 --seed 7",
        "presets",
    };
    bool ok = true;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        std::string files[2];
        for (int run = 0; run < 2; ++run) {
            const fs::path out = dir / ("run" + std::to_string(i) + "_" + std::to_string(run) + ".out");
            const std::string cmd = "'" MULTIELL_EXE "' " + commands[i] + " --out '" + out.string() + "'";
            const int raw = std::system(cmd.c_str());
            ok = ok && WIFEXITED(raw) && WEXITSTATUS(raw) == 0;
            files[run] = slurp(out);
        }
        ok = ok && !files[0].empty() && files[0] == files[1];
    }
    fs::remove_all(dir);
    return {ok, std::to_string(commands.size()) + " commands run twice, outputs compared byte for byte"};
}

Outcome conservation()
{
    RandomStream rng(10);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        ScenarioConfig c;
        c.txrx_distance_m = rng.uniform(10.0, 2000.0);
        c.ds_s = rng.uniform(10e-9, 1e-6);
        c.paths_per_cluster = 1 + static_cast<int>(rng.uniform() * 300.0);
        c.tx_pattern = AntennaPattern::gaussian(rng.uniform(1.0, 180.0), 0.0, rng.uniform(-180.0, 180.0));
        c.rx_pattern = AntennaPattern::gaussian(rng.uniform(1.0, 180.0), 0.0, rng.uniform(-180.0, 180.0));
        c.local_scattering = {rng.uniform(-180.0, 180.0), rng.uniform(0.0, 100.0), std::nullopt};
        if (rng.uniform() < 0.5)
            c.local_scattering.power_share = rng.uniform();
        if (rng.uniform() < 0.5)
            c.rice_factor_db = rng.uniform(-30.0, 30.0);
        double total = 0.0;
        for (const auto &p : draw_raw_paths(c, static_cast<std::uint64_t>(i)))
            total += p.power_lin;
        worst = std::max(worst, std::abs(total - 1.0));
    }
    return {worst <= 1e-9, "max |sum - 1| = " + sci(worst)};
}

Outcome pushforward()
{
    ScenarioConfig c;
    c.pdp = NormalizedPdp{"one", {{1.0, 0.0}}};
    c.ds_s = 200.0 / kSpeedOfLight; // eccentricity 0.5
    c.paths_per_cluster = 100000;
    c.local_scattering.power_share = 0.0;
    const auto paths = run_realization(c, 11);

    const double bin = 5.0;
    const int nbins = 72;
    auto index = [&](double a) {
        return static_cast<std::size_t>(std::clamp(static_cast<int>(std::ceil((a + 180.0) / bin)) - 1, 0, nbins - 1));
    };
    std::vector<double> hist(nbins, 0.0), oracle(nbins, 0.0);
    for (const auto &p : paths)
        hist[index(p.aoa_deg)] += p.power_lin;
    const int m = 720000;
    for (int k = 0; k < m; ++k)
        oracle[index(reflection_aoa(-180.0 + (k + 0.5) * 360.0 / m, 0.5))] += 1.0 / m;
    double tv = 0.0;
    for (int k = 0; k < nbins; ++k)
        tv += std::abs(hist[static_cast<std::size_t>(k)] - oracle[static_cast<std::size_t>(k)]);
    tv *= 0.5;
    return {tv < 0.02, "total variation " + fmt(tv, 4) + " over 5 deg bins"};
}

} // namespace

int main()
{
    report(1, "closed-form AOA matches the reflection construction", geometric_oracle());
    report(2, "analytic angle spreads", analytic_spread());

    const RxSweeps sweeps;
    report(3, "plateau for |alpha_R| > 60 deg, alpha_T = 180 deg", plateau(sweeps));
    report(4, "boresight minima at alpha_T = alpha_R = 0", boresight_minima());
    report(5, "minimum at alpha_R = 0 with alpha_T = 180 deg", back_to_back_minimum(sweeps));
    report(6, "omni Rx: 6 GHz spread above 60 GHz, values within 30%", omni_rx_frequency());
    report(7, "single interior maximum on (0, 180) at 25..55 deg", single_extremum(sweeps));
    report(8, "omni Rx spread identical for every alpha_R", omni_invariance());
    report(9, "CLI output byte-identical across runs", cli_determinism());
    report(10, "raw powers sum to one over 100 random configs", conservation());
    report(11, "single omni cluster matches the AOD pushforward", pushforward());

    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
