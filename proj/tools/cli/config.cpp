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

#include "cli/config.hpp"

#include "multiell/antenna.hpp"
#include "multiell/error.hpp"
#include "multiell/pdp.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <string_view>

namespace multiell::cli {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

AntennaPattern parse_antenna(const KeyValueConfig &cfg, const std::string &side)
{
    const std::string &kind = cfg.get(side + ".antenna");
    const double boresight = parse_double(side + ".boresight_deg", cfg.get(side + ".boresight_deg"));
    const bool custom_shape = cfg.is_set(side + ".hpbw_deg") || cfg.is_set(side + ".gain_dbi");

    if (kind == "omni") {
        if (custom_shape)
            throw ConfigError(side + ".hpbw_deg/gain_dbi only apply to " + side + ".antenna = gaussian");
        return AntennaPattern::omni(boresight);
    }
    if (kind == "gaussian") {
        const double hpbw = parse_double(side + ".hpbw_deg", cfg.get(side + ".hpbw_deg"));
        const double gain = parse_double(side + ".gain_dbi", cfg.get(side + ".gain_dbi"));
        try {
            return AntennaPattern::gaussian(hpbw, gain, boresight);
        } catch (const InvalidHpbw &e) {
            throw ConfigError(side + ".hpbw_deg: " + e.what());
        }
    }
    if (const auto preset = find_antenna_preset(kind)) {
        if (custom_shape)
            throw ConfigError(side + ".hpbw_deg/gain_dbi conflict with antenna preset " + kind);
        return pattern_from_preset(*preset, boresight);
    }
    throw ConfigError(side + ".antenna: expected A, B, C, D, omni or gaussian, got '" + kind + "'");
}

} // namespace

const std::map<std::string, std::string> &KeyValueConfig::defaults()
{
    static const std::map<std::string, std::string> d{
        {"scenario.frequency_label", "unspecified"},
        {"link.distance_m", "200"},
        {"link.ds_ns", "228"},
        {"pdp.file", "builtin"},
        {"tx.antenna", "omni"},
        {"tx.hpbw_deg", "20"},
        {"tx.gain_dbi", "0"},
        {"tx.boresight_deg", "0"},
        {"rx.antenna", "omni"},
        {"rx.hpbw_deg", "20"},
        {"rx.gain_dbi", "0"},
        {"rx.boresight_deg", "0"},
        {"model.paths_per_cluster", "500"},
        {"local_scattering.mu_deg", "0"},
        {"local_scattering.kappa", "3"},
        {"local_scattering.power_share", "auto"},
        {"los.rice_factor_db", "NLOS"},
        {"run.seed", "1"},
        {"sweep.axis", "tx"},
        {"sweep.from_deg", "-180"},
        {"sweep.to_deg", "180"},
        {"sweep.step_deg", "1"},
        {"sweep.trials", "10"},
        {"pas.bin_width_deg", "1"},
        {"pas.trials", "1"},
    };
    return d;
}

bool KeyValueConfig::is_known_key(const std::string &key)
{
    return defaults().count(key) != 0;
}

void KeyValueConfig::set(const std::string &key, const std::string &value)
{
    if (!is_known_key(key))
        throw ConfigError("unknown config key '" + key + "'");
    values_[key] = value;
}

void KeyValueConfig::merge(std::istream &in, const std::string &source)
{
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(source + ":" + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (!is_known_key(key))
            throw ConfigError(source + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
        values_[key] = value;
    }
}

void KeyValueConfig::merge_file(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file " + path.string());
    merge(in, path.string());
}

const std::string &KeyValueConfig::get(const std::string &key) const
{
    if (const auto it = values_.find(key); it != values_.end())
        return it->second;
    if (const auto it = defaults().find(key); it != defaults().end())
        return it->second;
    throw ConfigError("unknown config key '" + key + "'");
}

std::map<std::string, std::string> KeyValueConfig::resolved() const
{
    auto out = defaults();
    for (const auto &[k, v] : values_)
        out[k] = v;
    return out;
}

double parse_double(const std::string &key, const std::string &text)
{
    double v = 0.0;
    const char *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(v))
        throw ConfigError(key + ": expected a decimal number, got '" + text + "'");
    return v;
}

std::uint64_t parse_u64(const std::string &key, const std::string &text)
{
    std::uint64_t v = 0;
    const char *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end)
        throw ConfigError(key + ": expected an unsigned 64-bit integer, got '" + text + "'");
    return v;
}

int parse_int(const std::string &key, const std::string &text)
{
    int v = 0;
    const char *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end)
        throw ConfigError(key + ": expected an integer, got '" + text + "'");
    return v;
}

ScenarioConfig to_scenario(const KeyValueConfig &cfg)
{
    ScenarioConfig sc;
    sc.frequency_label = cfg.get("scenario.frequency_label");
    sc.txrx_distance_m = parse_double("link.distance_m", cfg.get("link.distance_m"));
    sc.ds_s = parse_double("link.ds_ns", cfg.get("link.ds_ns")) * 1e-9;

    const std::string &pdp_file = cfg.get("pdp.file");
    if (pdp_file != "builtin") {
        try {
            sc.pdp = load_pdp(pdp_file);
        } catch (const Error &e) {
            throw ConfigError("pdp.file " + pdp_file + ": " + e.what());
        }
    }

    sc.tx_pattern = parse_antenna(cfg, "tx");
    sc.rx_pattern = parse_antenna(cfg, "rx");
    sc.paths_per_cluster = parse_int("model.paths_per_cluster", cfg.get("model.paths_per_cluster"));

    sc.local_scattering.mu_deg = parse_double("local_scattering.mu_deg", cfg.get("local_scattering.mu_deg"));
    sc.local_scattering.kappa = parse_double("local_scattering.kappa", cfg.get("local_scattering.kappa"));
    const std::string &share = cfg.get("local_scattering.power_share");
    if (share != "auto")
        sc.local_scattering.power_share = parse_double("local_scattering.power_share", share);

    const std::string &rice = cfg.get("los.rice_factor_db");
    if (rice == "inf" || rice == "+inf")
        sc.rice_factor_db = std::numeric_limits<double>::infinity();
    else if (rice != "NLOS" && rice != "nlos")
        sc.rice_factor_db = parse_double("los.rice_factor_db", rice);

    sc.seed = parse_u64("run.seed", cfg.get("run.seed"));
    sc.validate();
    return sc;
}

SweepSettings to_sweep_settings(const KeyValueConfig &cfg)
{
    SweepSettings s;
    const std::string &axis = cfg.get("sweep.axis");
    if (axis == "tx")
        s.axis = SweepAxis::TxOrientation;
    else if (axis == "rx")
        s.axis = SweepAxis::RxOrientation;
    else
        throw ConfigError("sweep.axis: expected tx or rx, got '" + axis + "'");
    s.from_deg = parse_double("sweep.from_deg", cfg.get("sweep.from_deg"));
    s.to_deg = parse_double("sweep.to_deg", cfg.get("sweep.to_deg"));
    s.step_deg = parse_double("sweep.step_deg", cfg.get("sweep.step_deg"));
    s.trials = parse_int("sweep.trials", cfg.get("sweep.trials"));
    return s;
}

PasSettings to_pas_settings(const KeyValueConfig &cfg)
{
    PasSettings p;
    p.bin_width_deg = parse_double("pas.bin_width_deg", cfg.get("pas.bin_width_deg"));
    p.trials = parse_int("pas.trials", cfg.get("pas.trials"));
    return p;
}

} // namespace multiell::cli
