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

#include "multiell/pdp.hpp"

#include "multiell/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string_view>

namespace multiell {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Next whitespace-delimited token; advances `s` past it.
std::string_view next_token(std::string_view &s)
{
    s = trim(s);
    const auto end = s.find_first_of(" \t");
    const auto tok = s.substr(0, end);
    s = end == std::string_view::npos ? std::string_view{} : s.substr(end);
    return tok;
}

double parse_number(std::string_view tok, std::size_t line)
{
    double v = 0.0;
    const auto *end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v))
        throw ParseError("not a decimal number: '" + std::string(tok) + "'", line);
    return v;
}

} // namespace

NormalizedPdp parse_pdp(std::istream &in)
{
    NormalizedPdp pdp;
    pdp.name = "unnamed";
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty())
            continue;
        if (line.front() == '#') {
            auto body = trim(line.substr(1));
            constexpr std::string_view key = "name:";
            if (body.substr(0, key.size()) == key)
                pdp.name = std::string(trim(body.substr(key.size())));
            continue;
        }
        std::string_view rest = line;
        const auto delay_tok = next_token(rest);
        const auto power_tok = next_token(rest);
        if (power_tok.empty())
            throw ParseError("expected '<normalized_delay> <power_db>'", line_no);
        if (!trim(rest).empty())
            throw ParseError("unexpected trailing text '" + std::string(trim(rest)) + "'", line_no);

        PdpTap tap{parse_number(delay_tok, line_no), parse_number(power_tok, line_no)};
        if (tap.normalized_delay < 0.0)
            throw ParseError("negative delay", line_no);
        if (!pdp.taps.empty() && tap.normalized_delay < pdp.taps.back().normalized_delay)
            throw UnsortedDelays("delay " + std::string(delay_tok) + " on line " + std::to_string(line_no) +
                                 " is smaller than the previous tap");
        pdp.taps.push_back(tap);
    }
    if (pdp.taps.empty())
        throw EmptyProfile("profile '" + pdp.name + "' has no taps");
    return pdp;
}

NormalizedPdp load_pdp(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open PDP file " + path.string());
    return parse_pdp(in);
}

void write_pdp(std::ostream &out, const NormalizedPdp &pdp)
{
    out << "# name: " << pdp.name << '\n';
    char buf[64];
    for (const auto &t : pdp.taps) {
        auto p = std::to_chars(buf, buf + sizeof buf, t.normalized_delay).ptr;
        *p++ = ' ';
        p = std::to_chars(p, buf + sizeof buf, t.power_db).ptr;
        out.write(buf, p - buf).put('\n');
    }
}

ScaledPdp scale_pdp(const NormalizedPdp &pdp, double ds_s)
{
    if (!(ds_s > 0.0) || !std::isfinite(ds_s))
        throw InvalidDs("delay spread must be positive, got " + std::to_string(ds_s));
    if (pdp.taps.empty())
        throw EmptyProfile("profile '" + pdp.name + "' has no taps");

    ScaledPdp out;
    out.ds_s = ds_s;
    out.clusters.reserve(pdp.taps.size());
    double total = 0.0;
    for (const auto &t : pdp.taps) {
        const double lin = std::pow(10.0, t.power_db / 10.0);
        out.clusters.push_back({t.normalized_delay * ds_s, lin});
        total += lin;
    }
    for (auto &c : out.clusters)
        c.power_lin /= total;
    return out;
}

const NormalizedPdp &default_nlos_pdp()
{
    // The table lists a few taps out of delay order; they are sorted here.
    static const NormalizedPdp pdp{
        "3GPP TR 38.901 TDL-B (NLOS)",
        {
            {0.0000, 0.0},   {0.1072, -2.2},  {0.2095, -3.2},  {0.2155, -4.0},  {0.2870, -9.8},
            {0.2986, -1.2},  {0.3681, -7.6},  {0.3697, -3.0},  {0.3752, -3.4},  {0.5055, -5.2},
            {0.5283, -9.0},  {0.5700, -8.9},  {1.1021, -4.8},  {1.2756, -5.7},  {1.5474, -7.5},
            {1.7842, -1.9},  {2.0169, -7.6},  {2.8294, -12.2}, {3.0219, -9.8},  {3.6187, -11.4},
            {4.1067, -14.9}, {4.2790, -9.2},  {4.7834, -11.3},
        }};
    return pdp;
}

} // namespace multiell
