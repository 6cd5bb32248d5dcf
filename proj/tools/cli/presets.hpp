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

#ifndef MULTIELL_CLI_PRESETS_HPP
#define MULTIELL_CLI_PRESETS_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace multiell::cli {

/// Named bundle of config settings, applied on top of the defaults and below
/// any config file or command-line override.
struct ScenarioPreset {
    std::string name;
    std::string description;
    std::vector<std::pair<std::string, std::string>> settings;
};

const std::vector<ScenarioPreset> &scenario_presets();
const ScenarioPreset *find_scenario_preset(const std::string &name);

// Human-readable listing of antennas, delay-spread presets and scenarios.
void write_presets_listing(std::ostream &out);

} // namespace multiell::cli

#endif
