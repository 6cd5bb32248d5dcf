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

#include <CLI11.hpp>

#include <iostream>

using multiell::cli::RunManifest;

namespace {

struct Flags {
    std::string config, preset, out;
    std::vector<std::string> sets;
    std::string seed, axis, from, to, step, trials, bin_width;
};

void add_common(CLI::App *sub, Flags &f)
{
    sub->add_option("--config", f.config, "Config file (section.key = value lines)");
    sub->add_option("--preset", f.preset, "Bundled scenario, see `multiell presets`");
    sub->add_option("--set", f.sets, "Override one config key: key=value (repeatable)");
    sub->add_option("--seed", f.seed, "Master seed (u64); falls back to MULTIELL_SEED");
    sub->add_option("--out", f.out, "Output file; stdout if omitted");
}

bool split_assignment(const std::string &text, std::pair<std::string, std::string> &kv)
{
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0)
        return false;
    kv = {text.substr(0, eq), text.substr(eq + 1)};
    return true;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Monte Carlo angle spread simulator for the multi-elliptical propagation model"};
    app.require_subcommand(1);

    Flags f;
    CLI::App *sweep = app.add_subcommand("sweep", "Angle spread versus Tx or Rx orientation, as CSV");
    add_common(sweep, f);
    sweep->add_option("--sweep", f.axis, "Swept antenna: tx or rx");
    sweep->add_option("--from", f.from, "First angle (deg)");
    sweep->add_option("--to", f.to, "Last angle (deg)");
    sweep->add_option("--step", f.step, "Angle step (deg)");
    sweep->add_option("--trials", f.trials, "Realizations per angle");

    CLI::App *pas = app.add_subcommand("pas", "Power azimuth spectrum at the Rx, as CSV");
    add_common(pas, f);
    pas->add_option("--bin-width", f.bin_width, "Bin width (deg); must divide 360");
    pas->add_option("--trials", f.trials, "Pooled realizations");

    CLI::App *presets = app.add_subcommand("presets", "List bundled antennas and scenarios");
    presets->add_option("--out", f.out, "Output file; stdout if omitted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : multiell::cli::kExitUsage;
    }

    RunManifest m;
    m.config_path = f.config;
    m.preset = f.preset;
    m.output_path = f.out;
    for (const auto &s : f.sets) {
        std::pair<std::string, std::string> kv;
        if (!split_assignment(s, kv)) {
            std::cerr << "multiell: --set expects key=value, got '" << s << "'\n";
            return multiell::cli::kExitUsage;
        }
        m.overrides.push_back(kv);
    }
    auto flag = [&m](const char *key, const std::string &value) {
        if (!value.empty())
            m.flag_overrides.emplace_back(key, value);
    };
    flag("run.seed", f.seed);
    if (sweep->parsed()) {
        m.command = RunManifest::Command::Sweep;
        flag("sweep.axis", f.axis);
        flag("sweep.from_deg", f.from);
        flag("sweep.to_deg", f.to);
        flag("sweep.step_deg", f.step);
        flag("sweep.trials", f.trials);
    } else if (pas->parsed()) {
        m.command = RunManifest::Command::Pas;
        flag("pas.bin_width_deg", f.bin_width);
        flag("pas.trials", f.trials);
    } else {
        m.command = RunManifest::Command::Presets;
    }
    return multiell::cli::run_command(m, std::cout, std::cerr);
}
