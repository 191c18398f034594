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

#include "rischan/channel.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rischan {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

} // namespace

void PathSet::validate() const
{
    if (paths.empty())
        throw std::invalid_argument("path set must contain at least one path");
    tx_geom.validate();
    rx_geom.validate();
    if (!(wavelength > 0.0))
        throw std::invalid_argument("path set wavelength must be positive");
    for (std::size_t i = 0; i < paths.size(); ++i)
    {
        if (!(paths[i].amplitude >= 0.0) || !std::isfinite(paths[i].amplitude))
            throw std::invalid_argument("path amplitude must be finite and >= 0");
        if (i > 0 && paths[i].amplitude > paths[i - 1].amplitude)
            throw std::invalid_argument("paths must be ordered by non-increasing amplitude");
    }
}

Scenario Scenario::mono_path()
{
    return {ScenarioKind::MonoPath, 1, 1};
}

Scenario Scenario::rma()
{
    return {ScenarioKind::RMa, 1, 2};
}

Scenario Scenario::umi()
{
    return {ScenarioKind::UMi, 1, 30};
}

std::string to_string(ScenarioKind kind)
{
    switch (kind)
    {
    case ScenarioKind::MonoPath:
        return "mono";
    case ScenarioKind::RMa:
        return "rma";
    case ScenarioKind::UMi:
        return "umi";
    }
    return "unknown";
}

ScenarioKind parse_scenario_kind(const std::string &name)
{
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "mono" || lower == "monopath")
        return ScenarioKind::MonoPath;
    if (lower == "rma")
        return ScenarioKind::RMa;
    if (lower == "umi")
        return ScenarioKind::UMi;
    throw std::invalid_argument("unknown scenario '" + name + "' (expected mono, rma or umi)");
}

PathSet draw_path_set(const Scenario &scenario,
                      const LinkEnvironment &env,
                      const Placement &placement,
                      const ArrayGeometry &tx_geom,
                      const ArrayGeometry &rx_geom,
                      Rng &rng)
{
    if (scenario.min_paths < 1 || scenario.max_paths < scenario.min_paths)
        throw std::invalid_argument("scenario path-count range is empty");

    const double los_power_ratio =
        received_power_watts(1.0, env, placement.separation) *
        std::pow(10.0, -excess_loss(env, placement.separation) / 10.0);
    const double los_amplitude = std::sqrt(los_power_ratio);

    std::uniform_int_distribution<std::size_t> count_dist(scenario.min_paths, scenario.max_paths);
    std::uniform_real_distribution<double> phase_dist(0.0, kTwoPi);
    std::uniform_real_distribution<double> band_dist(-scenario.nlos_elevation_band, scenario.nlos_elevation_band);

    const std::size_t n_paths = count_dist(rng);

    PathSet ps;
    ps.tx_geom = tx_geom;
    ps.rx_geom = rx_geom;
    ps.wavelength = env.wavelength();
    ps.paths.reserve(n_paths);

    PathComponent los;
    los.amplitude = los_amplitude;
    los.phase = phase_dist(rng);
    los.aod = placement.direction;
    los.aoa = placement.direction.reversed();
    ps.paths.push_back(los);

    for (std::size_t k = 1; k < n_paths; ++k)
    {
        PathComponent nlos;
        nlos.amplitude = los_amplitude * std::pow(10.0, -static_cast<double>(k) * scenario.nlos_decay_db / 20.0);
        nlos.phase = phase_dist(rng);
        nlos.aod.azimuth = phase_dist(rng);
        nlos.aod.polar = std::numbers::pi / 2.0 + band_dist(rng);
        nlos.aoa.azimuth = phase_dist(rng);
        nlos.aoa.polar = std::numbers::pi / 2.0 + band_dist(rng);
        ps.paths.push_back(nlos);
    }
    return ps;
}

ChannelMatrix realize_channel(const PathSet &ps)
{
    ps.validate();
    const auto rows = static_cast<Eigen::Index>(ps.rx_geom.size());
    const auto cols = static_cast<Eigen::Index>(ps.tx_geom.size());
    ChannelMatrix out = ChannelMatrix::Zero(rows, cols);
    for (const auto &path : ps.paths)
    {
        const ComplexVector a_rx = steering_vector(ps.rx_geom, path.aoa, ps.wavelength);
        const ComplexVector a_tx = steering_vector(ps.tx_geom, path.aod, ps.wavelength);
        out.noalias() += std::polar(path.amplitude, path.phase) * a_rx * a_tx.adjoint();
    }
    return out;
}

void to_json(nlohmann::json &j, const Direction &d)
{
    j = nlohmann::json{{"azimuth", d.azimuth}, {"polar", d.polar}};
}

void from_json(const nlohmann::json &j, Direction &d)
{
    j.at("azimuth").get_to(d.azimuth);
    j.at("polar").get_to(d.polar);
}

void to_json(nlohmann::json &j, const ArrayGeometry &g)
{
    j = nlohmann::json{{"m_h", g.m_h}, {"m_v", g.m_v}, {"spacing", g.spacing}};
}

void from_json(const nlohmann::json &j, ArrayGeometry &g)
{
    j.at("m_h").get_to(g.m_h);
    j.at("m_v").get_to(g.m_v);
    j.at("spacing").get_to(g.spacing);
}

void to_json(nlohmann::json &j, const PathComponent &p)
{
    j = nlohmann::json{{"amplitude", p.amplitude}, {"phase", p.phase}, {"aod", p.aod}, {"aoa", p.aoa}};
}

void from_json(const nlohmann::json &j, PathComponent &p)
{
    j.at("amplitude").get_to(p.amplitude);
    j.at("phase").get_to(p.phase);
    j.at("aod").get_to(p.aod);
    j.at("aoa").get_to(p.aoa);
}

void to_json(nlohmann::json &j, const PathSet &ps)
{
    j = nlohmann::json{{"paths", ps.paths},
                       {"tx_geom", ps.tx_geom},
                       {"rx_geom", ps.rx_geom},
                       {"wavelength", ps.wavelength}};
}

void from_json(const nlohmann::json &j, PathSet &ps)
{
    j.at("paths").get_to(ps.paths);
    j.at("tx_geom").get_to(ps.tx_geom);
    j.at("rx_geom").get_to(ps.rx_geom);
    j.at("wavelength").get_to(ps.wavelength);
    ps.validate();
}

} // namespace rischan
