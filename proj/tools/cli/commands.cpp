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

#include "cli/commands.hpp"

#include "cli/presets.hpp"
#include "multiell/error.hpp"
#include "multiell/random.hpp"
#include "multiell/stats.hpp"
#include "multiell/sweep.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <locale>
#include <set>
#include <sstream>

namespace multiell::cli {

namespace {

// Tag separating PAS trial streams from sweep trial streams.
constexpr std::uint64_t kPasStreamTag = 0x706173;

void check_flag_value(const std::string &key, const std::string &value)
{
    try {
        if (key == "run.seed")
            parse_u64(key, value);
        else if (key == "sweep.trials" || key == "pas.trials")
            parse_int(key, value);
        else if (key == "sweep.axis") {
            if (value != "tx" && value != "rx")
                throw ConfigError("--sweep: expected tx or rx, got '" + value + "'");
        } else
            parse_double(key, value);
    } catch (const ConfigError &e) {
        throw UsageError(e.what());
    }
}

void write_header(std::ostream &os, const char *command, const RunManifest &m, const KeyValueConfig &cfg)
{
    os << "# multiell " << command << "\n";
    if (!m.preset.empty())
        os << "# preset = " << m.preset << "\n";
    os << "# resolved-config\n";
    for (const auto &[k, v] : cfg.resolved())
        os << "# " << k << " = " << v << "\n";
}

int emit(const RunManifest &m, const std::string &text, std::ostream &out, std::ostream &err)
{
    if (m.output_path.empty()) {
        out << text;
        out.flush();
        return out ? kExitOk : kExitConfig;
    }
    std::ofstream file(m.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "multiell: cannot open output file " << m.output_path << "\n";
        return kExitConfig;
    }
    file << text;
    file.close();
    if (!file) {
        err << "multiell: failed writing " << m.output_path << "\n";
        return kExitConfig;
    }
    return kExitOk;
}

template <class Body>
int guarded(std::ostream &err, Body body)
{
    try {
        return body();
    } catch (const UsageError &e) {
        err << "multiell: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BadBinWidth &e) {
        err << "multiell: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "multiell: " << e.what() << "\n";
        return kExitConfig;
    }
}

} // namespace

std::string format_fixed(double value, int decimals)
{
    if (!std::isfinite(value))
        throw Error("non-finite value in output");
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
    std::string s(buf, res.ptr);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos)
        s.erase(0, 1);
    return s;
}

KeyValueConfig resolve_config(const RunManifest &manifest, const char *env_seed)
{
    KeyValueConfig cfg;
    if (!manifest.preset.empty()) {
        const ScenarioPreset *p = find_scenario_preset(manifest.preset);
        if (!p)
            throw UsageError("unknown preset '" + manifest.preset + "' (see `multiell presets`)");
        for (const auto &[k, v] : p->settings)
            cfg.set(k, v);
    }
    if (!manifest.config_path.empty())
        cfg.merge_file(manifest.config_path);

    std::set<std::string> from_flags;
    for (const auto &[k, v] : manifest.flag_overrides) {
        check_flag_value(k, v);
        from_flags.insert(k);
        cfg.set(k, v);
    }
    for (const auto &[k, v] : manifest.overrides) {
        if (!KeyValueConfig::is_known_key(k))
            throw UsageError("--set: unknown config key '" + k + "'");
        if (from_flags.count(k))
            throw UsageError("'" + k + "' given both as a flag and through --set");
        cfg.set(k, v);
    }
    if (!cfg.is_set("run.seed") && env_seed && *env_seed) {
        try {
            parse_u64("MULTIELL_SEED", env_seed);
        } catch (const ConfigError &e) {
            throw UsageError(e.what());
        }
        cfg.set("run.seed", env_seed);
    }
    return cfg;
}

int cmd_sweep(const RunManifest &manifest, std::ostream &out, std::ostream &err)
{
    return guarded(err, [&] {
        const KeyValueConfig cfg = resolve_config(manifest, std::getenv("MULTIELL_SEED"));
        const ScenarioConfig scenario = to_scenario(cfg);
        const SweepSettings s = to_sweep_settings(cfg);
        std::vector<double> angles;
        try {
            angles = angle_grid(s.from_deg, s.to_deg, s.step_deg);
            if (s.trials < 1)
                throw ConfigError("sweep.trials must be at least 1");
        } catch (const ConfigError &e) {
            throw UsageError(e.what());
        }

        const SweepResult r = sweep_as(scenario, s.axis, angles, s.trials);

        std::ostringstream os;
        os.imbue(std::locale::classic());
        write_header(os, "sweep", manifest, cfg);
        os << "alpha_t_deg,alpha_r_deg,trial,as_deg\n";
        for (const auto &row : r.rows)
            os << format_fixed(row.alpha_t_deg, 6) << ',' << format_fixed(row.alpha_r_deg, 6) << ',' << row.trial
               << ',' << format_fixed(row.as_deg, 6) << '\n';
        os << "# aggregate\n";
        os << "angle,mean_as_deg,std_as_deg\n";
        for (const auto &p : r.aggregate)
            os << format_fixed(p.angle_deg, 6) << ',' << format_fixed(p.mean_as_deg, 6) << ','
               << format_fixed(p.std_as_deg, 6) << '\n';
        return emit(manifest, os.str(), out, err);
    });
}

int cmd_pas(const RunManifest &manifest, std::ostream &out, std::ostream &err)
{
    return guarded(err, [&] {
        const KeyValueConfig cfg = resolve_config(manifest, std::getenv("MULTIELL_SEED"));
        const ScenarioConfig scenario = to_scenario(cfg);
        const PasSettings s = to_pas_settings(cfg);
        if (s.trials < 1)
            throw UsageError("pas.trials must be at least 1");
        // Reject a bad bin width before spending time on the simulation.
        estimate_pas(std::vector<PathSample>{{0.0, 1.0, {}}}, s.bin_width_deg);

        std::vector<PathSample> pooled;
        const std::uint64_t base = derive_seed(scenario.seed, kPasStreamTag);
        for (int t = 0; t < s.trials; ++t) {
            const auto paths = run_realization(scenario, derive_seed(base, static_cast<std::uint64_t>(t)));
            pooled.insert(pooled.end(), paths.begin(), paths.end());
        }
        const AngularSpectrum pas = estimate_pas(pooled, s.bin_width_deg);

        std::ostringstream os;
        os.imbue(std::locale::classic());
        write_header(os, "pas", manifest, cfg);
        os << "angle_deg,density_per_deg\n";
        for (std::size_t k = 0; k < pas.density.size(); ++k)
            os << format_fixed(pas.bin_centers_deg[k], 6) << ',' << format_fixed(pas.density[k], 15) << '\n';
        return emit(manifest, os.str(), out, err);
    });
}

int cmd_presets(const RunManifest &manifest, std::ostream &out, std::ostream &err)
{
    return guarded(err, [&] {
        std::ostringstream os;
        os.imbue(std::locale::classic());
        write_presets_listing(os);
        return emit(manifest, os.str(), out, err);
    });
}

int run_command(const RunManifest &manifest, std::ostream &out, std::ostream &err)
{
    switch (manifest.command) {
    case RunManifest::Command::Sweep:
        return cmd_sweep(manifest, out, err);
    case RunManifest::Command::Pas:
        return cmd_pas(manifest, out, err);
    case RunManifest::Command::Presets:
        return cmd_presets(manifest, out, err);
    }
    return kExitUsage;
}

} // namespace multiell::cli
