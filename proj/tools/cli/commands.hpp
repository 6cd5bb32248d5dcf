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

#ifndef MULTIELL_CLI_COMMANDS_HPP
#define MULTIELL_CLI_COMMANDS_HPP

#include "cli/config.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace multiell::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1; // config or I/O error
inline constexpr int kExitUsage = 2;  // invalid flags or flag combinations

/// Invalid command-line usage; reported with kExitUsage.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunManifest {
    enum class Command { Sweep, Pas, Presets };

    Command command = Command::Sweep;
    std::string config_path; // empty: none
    std::string preset;      // empty: none
    std::string output_path; // empty: the `out` stream passed to the command
    // --set key=value, in command-line order.
    std::vector<std::pair<std::string, std::string>> overrides;
    // Keys set through dedicated flags (--seed, --from, ...).
    std::vector<std::pair<std::string, std::string>> flag_overrides;
};

/// Layers defaults, preset, config file, then overrides. run.seed falls back
/// to `env_seed` when no layer sets it. Throws UsageError for unknown presets,
/// unknown --set keys, malformed flag values and a key given both as a flag
/// and through --set; ConfigError for config file problems.
KeyValueConfig resolve_config(const RunManifest &manifest, const char *env_seed);

// Each command writes its result once, to manifest.output_path or `out`, and
// reports diagnostics on `err`.
int cmd_sweep(const RunManifest &manifest, std::ostream &out, std::ostream &err);
int cmd_pas(const RunManifest &manifest, std::ostream &out, std::ostream &err);
int cmd_presets(const RunManifest &manifest, std::ostream &out, std::ostream &err);

int run_command(const RunManifest &manifest, std::ostream &out, std::ostream &err);

// Fixed-point text, no exponent, "-0" normalized to "0". Locale independent.
std::string format_fixed(double value, int decimals);

} // namespace multiell::cli

#endif
