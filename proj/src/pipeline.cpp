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

#include "rischan/pipeline.hpp"

#include "rischan/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rischan {

namespace {

// RNG stream tags; the scenario sweep adds the scenario kind.
constexpr std::uint64_t kStreamRandomPhase = 1;
constexpr std::uint64_t kStreamScenario = 16;

void require(bool ok, const std::string &key, const std::string &what)
{
    if (!ok)
        throw std::invalid_argument(key + ": " + what);
}

void check_placement(const Placement &p, const std::string &prefix)
{
    require(std::isfinite(p.separation) && p.separation > 0.0, prefix + "_distance_m", "must be > 0");
    require(std::isfinite(p.direction.azimuth), prefix + "_azimuth_deg", "must be finite");
    require(std::isfinite(p.direction.polar) && p.direction.polar > 0.0 && p.direction.polar < std::numbers::pi,
            prefix + "_polar_deg", "polar elevation must lie strictly between 0 and 180 degrees");
}

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void require_siso(const ScenarioConfig &cfg)
{
    if (!cfg.siso())
        throw std::invalid_argument("received-power sweeps require single-antenna BS and UE");
}

double mean(const std::vector<double> &values)
{
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

} // namespace

void ScenarioConfig::validate() const
{
    try
    {
        env.validate();
    }
    catch (const std::invalid_argument &e)
    {
        throw std::invalid_argument(std::string("environment ") + e.what());
    }
    check_placement(bs_ris, "bs_ris");
    check_placement(ris_ue, "ris_ue");
    require(bs_ris.separation >= env.d0, "bs_ris_distance_m", "inside reference distance");
    require(ris_ue.separation >= env.d0, "ris_ue_distance_m", "inside reference distance");
    require(scenario.min_paths >= 1 && scenario.max_paths >= scenario.min_paths, "scenario", "empty path-count range");
    require(std::isfinite(scenario.nlos_decay_db) && scenario.nlos_decay_db >= 0.0, "nlos_decay_db", "must be >= 0");
    require(std::isfinite(scenario.nlos_elevation_band) && scenario.nlos_elevation_band >= 0.0 &&
                scenario.nlos_elevation_band < std::numbers::pi / 2.0,
            "nlos_elevation_band_deg", "must lie in [0, 90)");
    require(ris_elements >= 1, "ris_elements", "must be >= 1");
    require(ris_rows == 0 || ris_elements % ris_rows == 0, "ris_rows", "must divide ris_elements");
    require(std::isfinite(ris_spacing_wavelengths) && ris_spacing_wavelengths > 0.0, "ris_spacing_wavelengths",
            "must be > 0");
    require(ris_reflection >= 0.0 && ris_reflection <= 1.0, "ris_reflection", "must lie in [0, 1]");
    require(bs_antennas_h >= 1 && bs_antennas_v >= 1, "bs_antennas", "counts must be >= 1");
    require(ue_antennas_h >= 1 && ue_antennas_v >= 1, "ue_antennas", "counts must be >= 1");
    require(std::isfinite(p_t_dbm), "tx_power_dbm", "must be finite");
    require(std::isfinite(g_t_dbi), "tx_gain_dbi", "must be finite");
    require(std::isfinite(g_r_dbi), "rx_gain_dbi", "must be finite");
    require(trials >= 1, "trials", "must be >= 1");
    if (direct_distance_m)
        require(std::isfinite(*direct_distance_m) && *direct_distance_m >= env.d0, "direct_distance_m",
                "inside reference distance");
    for (double eta : blockage_levels_db)
        require(std::isfinite(eta) && eta >= 0.0, "blockage_levels_db", "levels must be >= 0");
    require(std::isfinite(random_phase_max) && random_phase_max > 0.0 && random_phase_max <= 2.0 * std::numbers::pi,
            "random_phase_max_deg", "must lie in (0, 360]");
    require(std::isfinite(shadow_delta), "shadow_delta", "must be finite");
    require(std::isfinite(foliage_curve_rate_db_per_m) && foliage_curve_rate_db_per_m >= 0.0 &&
                foliage_curve_rate_db_per_m <= 10.0,
            "foliage_curve_rate_db_per_m", "must lie in [0, 10] dB/m");
    require(std::isfinite(foliage_curve_depth_m) && foliage_curve_depth_m >= 0.0, "foliage_curve_depth_m",
            "must be >= 0");
}

LinkGains ScenarioConfig::gains() const
{
    return {dbm_to_watts(p_t_dbm), db_to_linear(g_t_dbi), db_to_linear(g_r_dbi)};
}

RisConfig ScenarioConfig::ris_for(std::size_t n) const
{
    RisConfig ris = RisConfig::uniform(n, wavelength());
    ris.geometry.spacing = ris_spacing_wavelengths * wavelength();
    if (ris_rows != 0 && n % ris_rows == 0)
    {
        ris.geometry.m_v = ris_rows;
        ris.geometry.m_h = n / ris_rows;
    }
    ris.reflection.setConstant(ris_reflection);
    return ris;
}

ArrayGeometry ScenarioConfig::bs_array() const
{
    return {bs_antennas_h, bs_antennas_v, wavelength() / 2.0};
}

ArrayGeometry ScenarioConfig::ue_array() const
{
    return {ue_antennas_h, ue_antennas_v, wavelength() / 2.0};
}

bool ScenarioConfig::siso() const
{
    return bs_antennas_h * bs_antennas_v == 1 && ue_antennas_h * ue_antennas_v == 1;
}

ThreeStepChannels compose_three_step(const ScenarioConfig &cfg, const RisConfig &ris, Rng &rng)
{
    ris.validate();
    ThreeStepChannels out;
    const LinkGains gains = cfg.gains();

    // Step 1: the BS transmits, the RIS receives with unit gain.
    out.ris_in_bs = placement_to_cartesian(cfg.bs_ris);
    out.bs_ris_paths = draw_path_set(cfg.scenario, cfg.env, cfg.bs_ris, cfg.bs_array(), ris.geometry, rng);
    out.H = realize_channel(out.bs_ris_paths);
    const double los1 = out.bs_ris_paths.paths.front().amplitude;
    out.p_r1_w = gains.p_t_w * los1 * los1;

    // Step 2: the RIS re-radiates what it received.
    out.ue_in_ris = placement_to_cartesian(cfg.ris_ue);
    out.ris_ue_paths = draw_path_set(cfg.scenario, cfg.env, cfg.ris_ue, ris.geometry, cfg.ue_array(), rng);
    out.G = realize_channel(out.ris_ue_paths);
    out.p_t2_w = cfg.ris_reflection * cfg.ris_reflection * out.p_r1_w;
    const double los2 = out.ris_ue_paths.paths.front().amplitude;
    out.p_r2_w = out.p_t2_w * los2 * los2;

    // Step 3: UE in the BS frame, then the direct link.
    out.ue_in_bs = compose_frames(out.ris_in_bs, out.ue_in_ris);
    out.ue_placement = cartesian_to_placement(out.ue_in_bs);
    out.direct_distance = cfg.direct_distance_m.value_or(out.ue_placement.separation);
    Placement direct = out.ue_placement;
    direct.separation = out.direct_distance;
    out.direct_paths = draw_path_set(cfg.scenario, cfg.env, direct, cfg.bs_array(), cfg.ue_array(), rng);
    out.Hd = realize_channel(out.direct_paths);
    return out;
}

ThreeStepChannels compose_three_step(const ScenarioConfig &cfg, Rng &rng)
{
    return compose_three_step(cfg, cfg.ris_for(cfg.ris_elements), rng);
}

void SweepResult::validate() const
{
    for (const auto &c : curves)
    {
        if (c.values.size() != axis.values.size())
            throw std::logic_error("sweep column '" + c.name + "' has a different length than the axis");
        for (double v : c.values)
            if (!std::isfinite(v))
                throw std::logic_error("sweep column '" + c.name + "' contains a non-finite value");
    }
    for (double v : axis.values)
        if (!std::isfinite(v))
            throw std::logic_error("sweep axis contains a non-finite value");
}

const SweepColumn &SweepResult::curve(const std::string &name) const
{
    for (const auto &c : curves)
        if (c.name == name)
            return c;
    throw std::out_of_range("no sweep column named '" + name + "'");
}

bool SweepResult::has_curve(const std::string &name) const
{
    return std::any_of(curves.begin(), curves.end(), [&](const SweepColumn &c) { return c.name == name; });
}

double quantile(std::vector<double> values, double q)
{
    if (values.empty())
        throw std::invalid_argument("quantile of an empty sample");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

SweepResult sweep_elements(const ScenarioConfig &cfg,
                           const std::vector<std::size_t> &n_values,
                           const std::vector<Curve> &curves)
{
    cfg.validate();
    require_siso(cfg);
    if (n_values.empty())
        throw std::invalid_argument("elements: at least one element count is required");
    for (std::size_t n : n_values)
        require(n >= 1, "elements", "element counts must be >= 1");

    const RisLinkGeometry geom = cfg.link_geometry();
    const LinkGains gains = cfg.gains();
    const double lambda = cfg.wavelength();
    const std::size_t n_max = far_field_max_elements(geom, lambda);
    const std::size_t points = n_values.size();

    SweepResult result;
    result.axis = {"n_elements", "count", {}};
    for (std::size_t n : n_values)
        result.axis.values.push_back(static_cast<double>(n));
    result.notes.push_back("n_max = " + std::to_string(n_max));
    for (std::size_t n : n_values)
        if (n > n_max)
        {
            result.warnings.push_back("N = " + std::to_string(n) + " exceeds the far-field bound N_max = " +
                                      std::to_string(n_max));
        }

    auto closed_form = [&](auto &&eval) {
        std::vector<double> col(points);
        for (std::size_t p = 0; p < points; ++p)
            col[p] = eval(n_values[p]);
        return col;
    };

    auto direct_d = [&] {
        return cfg.direct_distance_m.value_or(
            cartesian_to_placement(compose_frames(placement_to_cartesian(cfg.bs_ris), placement_to_cartesian(cfg.ris_ue)))
                .separation);
    };

    for (Curve c : curves)
    {
        switch (c)
        {
        case Curve::Optimal:
            result.curves.push_back({"optimal", "dBm", closed_form([&](std::size_t n) {
                                         return watts_to_dbm(optimal_received_power(cfg.env, geom, n, gains));
                                     })});
            break;
        case Curve::Shadowed:
            result.curves.push_back({"shadowed", "dBm", closed_form([&](std::size_t n) {
                                         return watts_to_dbm(optimal_received_power_shadowed(
                                             cfg.env, geom, n, gains, cfg.shadow_delta, cfg.shadowing_links));
                                     })});
            result.notes.push_back("shadow_delta = " + format_number(cfg.shadow_delta));
            break;
        case Curve::Foliage:
        {
            const double offset = cfg.foliage_curve_rate_db_per_m * cfg.foliage_curve_depth_m;
            result.curves.push_back({"foliage", "dBm", closed_form([&](std::size_t n) {
                                         return watts_to_dbm(optimal_received_power(cfg.env, geom, n, gains)) - offset;
                                     })});
            result.notes.push_back("foliage_loss_db = " + format_number(offset));
            break;
        }
        case Curve::Direct:
        {
            const double d = direct_d();
            const double p = direct_link_power(cfg.env, d, cfg.p_t_dbm, std::nullopt, cfg.g_t_dbi, cfg.g_r_dbi);
            result.curves.push_back({"direct", "dBm", std::vector<double>(points, p)});
            result.notes.push_back("direct_distance_m = " + format_number(d));
            break;
        }
        case Curve::BlockedDirect:
        {
            const double d = direct_d();
            for (double eta : cfg.blockage_levels_db)
            {
                const double p =
                    direct_link_power(cfg.env, d, cfg.p_t_dbm, BlockageModel{eta}, cfg.g_t_dbi, cfg.g_r_dbi);
                result.curves.push_back(
                    {"direct_blocked_" + format_number(eta) + "db", "dBm", std::vector<double>(points, p)});
            }
            break;
        }
        case Curve::RandomPhase:
        {
            const std::size_t trials = cfg.trials;
            std::vector<double> samples(points * trials);
            parallel_for(samples.size(), cfg.threads, [&](std::size_t idx) {
                const std::size_t p = idx / trials;
                const std::size_t t = idx % trials;
                Rng rng = make_stream(cfg.seed, kStreamRandomPhase, p, t);
                RisConfig ris = cfg.ris_for(n_values[p]);
                const ThreeStepChannels ch = compose_three_step(cfg, ris, rng);
                ris.phases = random_phases(ris.n(), cfg.random_phase_max, rng);
                samples[idx] = multipath_received_power(ch.G, ch.H, ris, gains);
            });
            std::vector<double> col(points);
            for (std::size_t p = 0; p < points; ++p)
            {
                const std::vector<double> block(samples.begin() + static_cast<std::ptrdiff_t>(p * trials),
                                                samples.begin() + static_cast<std::ptrdiff_t>((p + 1) * trials));
                col[p] = watts_to_dbm(mean(block));
            }
            result.curves.push_back({"random_phase_mean", "dBm", std::move(col)});
            result.notes.push_back("trials = " + std::to_string(trials));
            break;
        }
        }
    }
    result.validate();
    return result;
}

SweepResult sweep_distance_split(const ScenarioConfig &cfg, double total, std::size_t steps)
{
    cfg.validate();
    const std::size_t n = cfg.ris_elements;
    const double lambda = cfg.wavelength();
    const double d_min = rayleigh_distance(n, lambda);
    if (!std::isfinite(total) || total <= 2.0 * d_min)
        throw std::invalid_argument("split_total_m: total separation must exceed twice the Rayleigh distance (" +
                                    format_number(2.0 * d_min) + " m)");
    if (steps < 1)
        throw std::invalid_argument("split_steps: must be >= 1");

    const double lo = d_min / total;
    const double width = 1.0 - 2.0 * lo;
    auto fraction = [&](std::size_t k) {
        return lo + width * (static_cast<double>(k) + 0.5) / static_cast<double>(steps);
    };

    const LinkGains gains = cfg.gains();
    SweepResult result;
    result.axis = {"d1_fraction", "ratio", {}};
    SweepColumn d1_col{"d1", "m", {}};
    SweepColumn d2_col{"d2", "m", {}};
    SweepColumn power{"optimal", "dBm", {}};
    for (std::size_t k = 0; k < steps; ++k)
    {
        const double f = fraction(k);
        // d2 uses the mirrored grid point so the curve is exactly symmetric
        const double d1 = f * total;
        const double d2 = fraction(steps - 1 - k) * total;
        result.axis.values.push_back(f);
        d1_col.values.push_back(d1);
        d2_col.values.push_back(d2);
        const RisLinkGeometry geom{d1, d2};
        power.values.push_back(watts_to_dbm(optimal_received_power(cfg.env, geom, n, gains)));
        if (d1 < cfg.env.d0 || d2 < cfg.env.d0)
            result.warnings.push_back("d1 = " + format_number(d1) + " m or d2 = " + format_number(d2) +
                                      " m lies inside the reference distance");
    }
    result.curves = {std::move(power), std::move(d1_col), std::move(d2_col)};
    result.notes.push_back("total_m = " + format_number(total));
    result.notes.push_back("n_elements = " + std::to_string(n));
    result.notes.push_back("rayleigh_distance_m = " + format_number(d_min));
    result.notes.push_back("rayleigh_distance_normalized = " + format_number(d_min / total));
    result.validate();
    return result;
}

SweepResult sweep_scenario(const ScenarioConfig &cfg,
                           const std::vector<std::size_t> &n_values,
                           const std::vector<ScenarioKind> &scenarios,
                           std::size_t trials)
{
    cfg.validate();
    require_siso(cfg);
    require(trials >= 1, "trials", "must be >= 1");
    if (n_values.empty())
        throw std::invalid_argument("elements: at least one element count is required");

    const LinkGains gains = cfg.gains();
    const std::size_t points = n_values.size();
    const std::size_t n_max = far_field_max_elements(cfg.link_geometry(), cfg.wavelength());

    SweepResult result;
    result.axis = {"n_elements", "count", {}};
    for (std::size_t n : n_values)
    {
        result.axis.values.push_back(static_cast<double>(n));
        if (n > n_max)
            result.warnings.push_back("N = " + std::to_string(n) + " exceeds the far-field bound N_max = " +
                                      std::to_string(n_max));
    }
    result.notes.push_back("n_max = " + std::to_string(n_max));
    result.notes.push_back("trials = " + std::to_string(trials));
    result.notes.push_back("random_phase_max_deg = " + format_number(cfg.random_phase_max * 180.0 / std::numbers::pi));

    for (ScenarioKind kind : scenarios)
    {
        ScenarioConfig scfg = cfg;
        const Scenario preset = kind == ScenarioKind::RMa   ? Scenario::rma()
                                : kind == ScenarioKind::UMi ? Scenario::umi()
                                                            : Scenario::mono_path();
        scfg.scenario.kind = preset.kind;
        scfg.scenario.min_paths = preset.min_paths;
        scfg.scenario.max_paths = preset.max_paths;

        std::vector<double> samples(points * trials);
        const std::uint64_t stream = kStreamScenario + static_cast<std::uint64_t>(kind);
        parallel_for(samples.size(), cfg.threads, [&](std::size_t idx) {
            const std::size_t p = idx / trials;
            const std::size_t t = idx % trials;
            Rng rng = make_stream(cfg.seed, stream, p, t);
            RisConfig ris = scfg.ris_for(n_values[p]);
            const ThreeStepChannels ch = compose_three_step(scfg, ris, rng);
            ris.phases = random_phases(ris.n(), cfg.random_phase_max, rng);
            samples[idx] = multipath_received_power(ch.G, ch.H, ris, gains);
        });

        const std::string prefix = to_string(kind);
        SweepColumn mean_col{prefix + "_mean", "dBm", {}};
        SweepColumn median_col{prefix + "_median", "dBm", {}};
        SweepColumn q10_col{prefix + "_q10", "dBm", {}};
        SweepColumn q90_col{prefix + "_q90", "dBm", {}};
        for (std::size_t p = 0; p < points; ++p)
        {
            const std::vector<double> block(samples.begin() + static_cast<std::ptrdiff_t>(p * trials),
                                            samples.begin() + static_cast<std::ptrdiff_t>((p + 1) * trials));
            mean_col.values.push_back(watts_to_dbm(mean(block)));
            median_col.values.push_back(watts_to_dbm(quantile(block, 0.5)));
            q10_col.values.push_back(watts_to_dbm(quantile(block, 0.1)));
            q90_col.values.push_back(watts_to_dbm(quantile(block, 0.9)));
        }
        result.curves.push_back(std::move(mean_col));
        result.curves.push_back(std::move(median_col));
        result.curves.push_back(std::move(q10_col));
        result.curves.push_back(std::move(q90_col));
    }
    result.validate();
    return result;
}

} // namespace rischan
