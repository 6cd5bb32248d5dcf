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

#include "cli/presets.hpp"

#include "multiell/antenna.hpp"

namespace multiell::cli {

namespace {

using Settings = std::vector<std::pair<std::string, std::string>>;

constexpr const char *kDistance = "200";
constexpr const char *kDs6 = "363";
constexpr const char *kDs60 = "228";

// Concentration of the local scattering used by the figure scenarios.
constexpr const char *kFigureKappa = "20";

const char *ds_for(char antenna)
{
    return (antenna == 'A' || antenna == 'B') ? kDs60 : kDs6;
}

const char *label_for(char antenna)
{
    return (antenna == 'A' || antenna == 'B') ? "60GHz" : "6GHz";
}

Settings figure_base(char antenna)
{
    return {
        {"scenario.frequency_label", label_for(antenna)},
        {"link.distance_m", kDistance},
        {"link.ds_ns", ds_for(antenna)},
        {"tx.antenna", std::string(1, antenna)},
        {"local_scattering.kappa", kFigureKappa},
        {"sweep.from_deg", "-180"},
        {"sweep.to_deg", "180"},
        {"sweep.step_deg", "1"},
        {"sweep.trials", "10"},
    };
}

// Sweep of alpha_T with the Rx fixed at `alpha_r`.
ScenarioPreset tx_sweep(const std::string &name, char antenna, bool omni_rx, const std::string &alpha_r)
{
    ScenarioPreset p{name, "", figure_base(antenna)};
    p.settings.emplace_back("rx.antenna", omni_rx ? "omni" : std::string(1, antenna));
    p.settings.emplace_back("rx.boresight_deg", alpha_r);
    p.settings.emplace_back("tx.boresight_deg", "0");
    p.settings.emplace_back("sweep.axis", "tx");
    p.description = std::string("antenna ") + antenna + " Tx, " + (omni_rx ? "omni" : std::string(1, antenna)) +
                    " Rx at alpha_R = " + alpha_r + " deg, sweep alpha_T, " + label_for(antenna);
    return p;
}

// Sweep of alpha_R with the Tx fixed at `alpha_t`.
ScenarioPreset rx_sweep(const std::string &name, char antenna, bool omni_rx, const std::string &alpha_t)
{
    ScenarioPreset p{name, "", figure_base(antenna)};
    p.settings.emplace_back("rx.antenna", omni_rx ? "omni" : std::string(1, antenna));
    p.settings.emplace_back("tx.boresight_deg", alpha_t);
    p.settings.emplace_back("rx.boresight_deg", "0");
    p.settings.emplace_back("sweep.axis", "rx");
    p.description = std::string("antenna ") + antenna + " Tx at alpha_T = " + alpha_t + " deg, " +
                    (omni_rx ? "omni" : std::string(1, antenna)) + " Rx, sweep alpha_R, " + label_for(antenna);
    return p;
}

std::vector<ScenarioPreset> build_presets()
{
    std::vector<ScenarioPreset> out;
    out.push_back({"uma-6ghz",
                   "UMa normal-delay NLOS link at 6GHz, DS 363 ns, omni antennas",
                   {{"scenario.frequency_label", "6GHz"}, {"link.distance_m", kDistance}, {"link.ds_ns", kDs6}}});
    out.push_back({"uma-60ghz",
                   "UMa normal-delay NLOS link at 60GHz, DS 228 ns, omni antennas",
                   {{"scenario.frequency_label", "60GHz"}, {"link.distance_m", kDistance}, {"link.ds_ns", kDs60}}});

    for (const auto &[fig, antennas] : {std::pair{"fig1", "AB"}, std::pair{"fig2", "CD"}}) {
        for (const char *a = antennas; *a; ++a) {
            const std::string base = std::string(fig) + "-" + *a;
            out.push_back(tx_sweep(base, *a, false, "0"));
            out.push_back(tx_sweep(base + "-omni", *a, true, "0"));
        }
    }
    for (const char a : {'A', 'B', 'C', 'D'})
        out.push_back(tx_sweep(std::string("fig3-") + a, a, false, "0"));

    for (const auto &[fig, antennas] : {std::pair{"fig4", "AB"}, std::pair{"fig5", "CD"}}) {
        for (const char *a = antennas; *a; ++a) {
            const std::string base = std::string(fig) + "-" + *a;
            out.push_back(rx_sweep(base, *a, false, "180"));
            out.push_back(rx_sweep(base + "-omni", *a, true, "180"));
        }
    }
    for (const char a : {'A', 'B', 'C', 'D'})
        out.push_back(rx_sweep(std::string("fig6-") + a, a, false, "180"));

    for (const char *angle : {"0", "45", "90", "135", "180"}) {
        out.push_back(tx_sweep(std::string("fig7-A-rx") + angle, 'A', false, angle));
    }
    for (const char *angle : {"0", "45", "90", "135", "180"}) {
        out.push_back(rx_sweep(std::string("fig8-A-tx") + angle, 'A', false, angle));
    }
    return out;
}

} // namespace

const std::vector<ScenarioPreset> &scenario_presets()
{
    static const std::vector<ScenarioPreset> presets = build_presets();
    return presets;
}

const ScenarioPreset *find_scenario_preset(const std::string &name)
{
    for (const auto &p : scenario_presets())
        if (p.name == name)
            return &p;
    return nullptr;
}

void write_presets_listing(std::ostream &out)
{
    out << "antennas (Gaussian power pattern; set tx.antenna / rx.antenna)\n";
    for (const auto &a : kAntennaPresets)
        out << "  " << a.name << ": " << a.gain_dbi << " dBi, HPBW " << a.hpbw_deg << " deg, " << a.band << " ("
            << a.model << ")\n";
    out << "  omni: isotropic in azimuth\n";
    out << "  gaussian: custom, from *.hpbw_deg and *.gain_dbi\n";
    out << "\ndelay spread presets (3GPP TDL-B NLOS profile)\n";
    out << "  UMa 6GHz DS " << kDs6 << " ns\n";
    out << "  UMa 60GHz DS " << kDs60 << " ns\n";
    out << "\nlink: Tx-Rx distance " << kDistance << " m\n";
    out << "\nscenarios (--preset <name>)\n";
    for (const auto &p : scenario_presets())
        out << "  " << p.name << ": " << p.description << "\n";
}

} // namespace multiell::cli
