// SPDX-License-Identifier: Apache-2.0
//
// rischan: channel simulator and link-budget engine for RIS-assisted mmWave links
// Copyright (C) 2026 The rischan authors
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

#include "rischan/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace rischan {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string where(const std::string &key, const YAML::Node &node)
{
    const YAML::Mark mark = node.Mark();
    if (mark.line >= 0)
        return key + " (line " + std::to_string(mark.line + 1) + ")";
    return key;
}

template <typename T>
T scalar(const std::string &key, const YAML::Node &node, const char *expected)
{
    if (!node.IsScalar())
        throw ConfigError(where(key, node) + ": expected " + expected);
    try
    {
        return node.as<T>();
    }
    catch (const YAML::Exception &)
    {
        throw ConfigError(where(key, node) + ": expected " + expected + ", got '" + node.Scalar() + "'");
    }
}

double number(const std::string &key, const YAML::Node &node)
{
    const double v = scalar<double>(key, node, "a number");
    if (!std::isfinite(v))
        throw ConfigError(where(key, node) + ": must be finite");
    return v;
}

std::size_t count(const std::string &key, const YAML::Node &node)
{
    const std::string text = node.IsScalar() ? node.Scalar() : std::string();
    if (!text.empty() && text.front() == '-')
        throw ConfigError(where(key, node) + ": expected a non-negative integer");
    return scalar<std::size_t>(key, node, "a non-negative integer");
}

std::string text(const std::string &key, const YAML::Node &node)
{
    return scalar<std::string>(key, node, "a string");
}

template <typename T, typename Fn>
std::vector<T> list(const std::string &key, const YAML::Node &node, Fn &&item)
{
    std::vector<T> out;
    if (node.IsScalar())
    {
        out.push_back(item(key, node));
        return out;
    }
    if (!node.IsSequence())
        throw ConfigError(where(key, node) + ": expected a list");
    for (const auto &child : node)
        out.push_back(item(key, child));
    return out;
}

using Setter = void (*)(RunConfig &, const std::string &, const YAML::Node &);

struct KeyHandler
{
    const char *key;
    Setter set;
};

// clang-format off
const KeyHandler kHandlers[] = {
    {"frequency_ghz", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.env.frequency_hz = number(k, n) * 1e9; }},
    {"d0_m", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.env.d0 = number(k, n); }},
    {"path_loss_exponent", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.env.mu = number(k, n); }},
    {"shadow_sigma_db", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.env.shadow_sigma_db = number(k, n); }},
    {"atmospheric_db_per_m", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.env.atmospheric_db_per_m = number(k, n); }},
    {"foliage_rate_db_per_m", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.env.foliage_rate_db_per_m = number(k, n); }},
    {"foliage_depth_m", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.env.foliage_depth_m = number(k, n); }},
    {"bs_ris_distance_m", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.bs_ris.separation = number(k, n); }},
    {"bs_ris_azimuth_deg", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.bs_ris.direction.azimuth = number(k, n) * kDeg; }},
    {"bs_ris_polar_deg", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.bs_ris.direction.polar = number(k, n) * kDeg; }},
    {"ris_ue_distance_m", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.ris_ue.separation = number(k, n); }},
    {"ris_ue_azimuth_deg", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.ris_ue.direction.azimuth = number(k, n) * kDeg; }},
    {"ris_ue_polar_deg", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.ris_ue.direction.polar = number(k, n) * kDeg; }},
    {"scenario", [](RunConfig &c, const std::string &k, const YAML::Node &n) {
        ScenarioKind kind;
        try { kind = parse_scenario_kind(text(k, n)); }
        catch (const std::invalid_argument &e) { throw ConfigError(where(k, n) + ": " + e.what()); }
        const Scenario preset = kind == ScenarioKind::RMa ? Scenario::rma() : kind == ScenarioKind::UMi ? Scenario::umi() : Scenario::mono_path();
        c.scenario.scenario.kind = preset.kind;
        c.scenario.scenario.min_paths = preset.min_paths;
        c.scenario.scenario.max_paths = preset.max_paths;
    }},
    {"nlos_decay_db", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.scenario.nlos_decay_db = number(k, n); }},
    {"nlos_elevation_band_deg", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.scenario.nlos_elevation_band = number(k, n) * kDeg; }},
    {"ris_elements", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.ris_elements = count(k, n); }},
    {"ris_rows", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.ris_rows = count(k, n); }},
    {"ris_spacing_wavelengths", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.ris_spacing_wavelengths = number(k, n); }},
    {"ris_reflection", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.ris_reflection = number(k, n); }},
    {"bs_antennas_h", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.bs_antennas_h = count(k, n); }},
    {"bs_antennas_v", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.bs_antennas_v = count(k, n); }},
    {"ue_antennas_h", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.ue_antennas_h = count(k, n); }},
    {"ue_antennas_v", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.ue_antennas_v = count(k, n); }},
    {"tx_power_dbm", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.p_t_dbm = number(k, n); }},
    {"tx_gain_dbi", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.g_t_dbi = number(k, n); }},
    {"rx_gain_dbi", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.g_r_dbi = number(k, n); }},
    {"seed", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.seed = scalar<std::uint64_t>(k, n, "an unsigned 64-bit integer"); }},
    {"trials", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.trials = count(k, n); }},
    {"threads", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.threads = count(k, n); }},
    {"direct_distance_m",
     [](RunConfig &c, const std::string &k, const YAML::Node &n) {
         if (n.IsScalar() && n.Scalar() == "derived")
             c.scenario.direct_distance_m.reset();
         else
             c.scenario.direct_distance_m = number(k, n);
     }},
    {"blockage_levels_db", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.blockage_levels_db = list<double>(k, n, number); }},
    {"random_phase_max_deg", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.random_phase_max = number(k, n) * kDeg; }},
    {"shadow_delta", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.shadow_delta = number(k, n); }},
    {"shadowing_links", [](RunConfig &c, const std::string &k, const YAML::Node &n) {
        const std::string v = text(k, n);
        if (v == "both") c.scenario.shadowing_links = ShadowingLinks::Both;
        else if (v == "single") c.scenario.shadowing_links = ShadowingLinks::Single;
        else throw ConfigError(where(k, n) + ": expected 'both' or 'single', got '" + v + "'");
    }},
    {"foliage_curve_rate_db_per_m", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.foliage_curve_rate_db_per_m = number(k, n); }},
    {"foliage_curve_depth_m", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.scenario.foliage_curve_depth_m = number(k, n); }},
    {"elements", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.sweep.elements = list<std::size_t>(k, n, count); }},
    {"split_total_m", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.sweep.split_total_m = number(k, n); }},
    {"split_steps", [](RunConfig &c, const std::string &k, const YAML::Node &n) { c.sweep.split_steps = count(k, n); }},
};
// clang-format on

const std::vector<std::size_t> kElementGrid{100, 200, 300, 500, 700, 1000, 2000, 3000, 5000, 7000, 10000};
const std::vector<std::size_t> kScenarioGrid{100, 300, 1000, 3000, 10000};

} // namespace

std::string to_string(ExperimentId id)
{
    switch (id)
    {
    case ExperimentId::Fig2:
        return "fig2";
    case ExperimentId::Fig3:
        return "fig3";
    case ExperimentId::Fig4:
        return "fig4";
    case ExperimentId::Fig5:
        return "fig5";
    case ExperimentId::Custom:
        return "custom";
    }
    return "unknown";
}

ExperimentId parse_experiment(const std::string &name)
{
    for (ExperimentId id : {ExperimentId::Fig2, ExperimentId::Fig3, ExperimentId::Fig4, ExperimentId::Fig5,
                            ExperimentId::Custom})
        if (to_string(id) == name)
            return id;
    throw ConfigError("experiment: unknown id '" + name + "' (expected fig2, fig3, fig4, fig5 or custom)");
}

RunConfig experiment_defaults(ExperimentId id)
{
    RunConfig cfg;
    cfg.sweep.elements = kElementGrid;
    switch (id)
    {
    case ExperimentId::Fig4:
        cfg.scenario.direct_distance_m = 105.0;
        break;
    case ExperimentId::Fig5:
        cfg.sweep.elements = kScenarioGrid;
        break;
    default:
        break;
    }
    return cfg;
}

RunConfig apply_config_text(const std::string &text, RunConfig base)
{
    YAML::Node root;
    try
    {
        root = YAML::Load(text);
    }
    catch (const YAML::ParserException &e)
    {
        throw ConfigError("parse error at line " + std::to_string(e.mark.line + 1) + ", column " +
                          std::to_string(e.mark.column + 1) + ": " + e.msg);
    }
    if (root.IsNull())
        return base;
    if (!root.IsMap())
        throw ConfigError("config must be a flat key: value mapping");

    for (const auto &entry : root)
    {
        const std::string key = entry.first.Scalar();
        const auto *handler = std::find_if(std::begin(kHandlers), std::end(kHandlers),
                                           [&](const KeyHandler &h) { return key == h.key; });
        if (handler == std::end(kHandlers))
            throw ConfigError(where(key, entry.first) + ": unknown key");
        if (entry.second.IsNull())
            throw ConfigError(where(key, entry.first) + ": missing value");
        handler->set(base, key, entry.second);
    }
    return base;
}

RunConfig apply_config_file(const std::string &path, RunConfig base)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return apply_config_text(ss.str(), std::move(base));
}

const std::vector<std::string> &config_keys()
{
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> out;
        for (const auto &h : kHandlers)
            out.emplace_back(h.key);
        return out;
    }();
    return keys;
}

std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig &cfg)
{
    const ScenarioConfig &s = cfg.scenario;
    auto join = [](const auto &values) {
        std::string out = "[";
        for (std::size_t i = 0; i < values.size(); ++i)
        {
            if (i)
                out += ", ";
            out += fmt(static_cast<double>(values[i]));
        }
        return out + "]";
    };

    return {
        {"frequency_ghz", fmt(s.env.frequency_hz / 1e9)},
        {"d0_m", fmt(s.env.d0)},
        {"path_loss_exponent", fmt(s.env.mu)},
        {"shadow_sigma_db", fmt(s.env.shadow_sigma_db)},
        {"atmospheric_db_per_m", fmt(s.env.atmospheric_db_per_m)},
        {"foliage_rate_db_per_m", fmt(s.env.foliage_rate_db_per_m)},
        {"foliage_depth_m", fmt(s.env.foliage_depth_m)},
        {"bs_ris_distance_m", fmt(s.bs_ris.separation)},
        {"bs_ris_azimuth_deg", fmt(s.bs_ris.direction.azimuth / kDeg)},
        {"bs_ris_polar_deg", fmt(s.bs_ris.direction.polar / kDeg)},
        {"ris_ue_distance_m", fmt(s.ris_ue.separation)},
        {"ris_ue_azimuth_deg", fmt(s.ris_ue.direction.azimuth / kDeg)},
        {"ris_ue_polar_deg", fmt(s.ris_ue.direction.polar / kDeg)},
        {"scenario", to_string(s.scenario.kind)},
        {"nlos_decay_db", fmt(s.scenario.nlos_decay_db)},
        {"nlos_elevation_band_deg", fmt(s.scenario.nlos_elevation_band / kDeg)},
        {"ris_elements", std::to_string(s.ris_elements)},
        {"ris_rows", std::to_string(s.ris_rows)},
        {"ris_spacing_wavelengths", fmt(s.ris_spacing_wavelengths)},
        {"ris_reflection", fmt(s.ris_reflection)},
        {"bs_antennas_h", std::to_string(s.bs_antennas_h)},
        {"bs_antennas_v", std::to_string(s.bs_antennas_v)},
        {"ue_antennas_h", std::to_string(s.ue_antennas_h)},
        {"ue_antennas_v", std::to_string(s.ue_antennas_v)},
        {"tx_power_dbm", fmt(s.p_t_dbm)},
        {"tx_gain_dbi", fmt(s.g_t_dbi)},
        {"rx_gain_dbi", fmt(s.g_r_dbi)},
        {"seed", std::to_string(s.seed)},
        {"trials", std::to_string(s.trials)},
        {"direct_distance_m", s.direct_distance_m ? fmt(*s.direct_distance_m) : std::string("derived")},
        {"blockage_levels_db", join(s.blockage_levels_db)},
        {"random_phase_max_deg", fmt(s.random_phase_max / kDeg)},
        {"shadow_delta", fmt(s.shadow_delta)},
        {"shadowing_links", s.shadowing_links == ShadowingLinks::Both ? "both" : "single"},
        {"foliage_curve_rate_db_per_m", fmt(s.foliage_curve_rate_db_per_m)},
        {"foliage_curve_depth_m", fmt(s.foliage_curve_depth_m)},
        {"elements", join(cfg.sweep.elements)},
        {"split_total_m", fmt(cfg.sweep.split_total_m)},
        {"split_steps", std::to_string(cfg.sweep.split_steps)},
    };
}

} // namespace rischan
