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

#ifndef MULTIELL_CLI_CONFIG_HPP
#define MULTIELL_CLI_CONFIG_HPP

#include "multiell/engine.hpp"
#include "multiell/sweep.hpp"

#include <filesystem>
#include <istream>
#include <map>
#include <set>
#include <string>

namespace multiell::cli {

/// Flat `section.key = value` configuration. Values are kept as the text the
/// user wrote so the resolved configuration can be echoed verbatim.
class KeyValueConfig {
public:
    static const std::map<std::string, std::string> &defaults();
    static bool is_known_key(const std::string &key);

    // Throws ConfigError for unknown keys.
    void set(const std::string &key, const std::string &value);

    // Reads `key = value` lines; '#' starts a comment. Throws ConfigError
    // naming `source` and the line on malformed input.
    void merge(std::istream &in, const std::string &source);
    void merge_file(const std::filesystem::path &path);

    bool is_set(const std::string &key) const { return values_.count(key) != 0; }
    const std::string &get(const std::string &key) const;

    // Defaults overlaid with every explicitly set key, sorted by key.
    std::map<std::string, std::string> resolved() const;

private:
    std::map<std::string, std::string> values_;
};

struct SweepSettings {
    SweepAxis axis = SweepAxis::TxOrientation;
    double from_deg = -180.0;
    double to_deg = 180.0;
    double step_deg = 1.0;
    int trials = 10;
};

struct PasSettings {
    double bin_width_deg = 1.0;
    int trials = 1;
};

// Typed views; throw ConfigError on values that do not parse.
ScenarioConfig to_scenario(const KeyValueConfig &cfg);
SweepSettings to_sweep_settings(const KeyValueConfig &cfg);
PasSettings to_pas_settings(const KeyValueConfig &cfg);

double parse_double(const std::string &key, const std::string &text);
std::uint64_t parse_u64(const std::string &key, const std::string &text);
int parse_int(const std::string &key, const std::string &text);

} // namespace multiell::cli

#endif
