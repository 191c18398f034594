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

#pragma once

#include "rischan/channel.hpp"
#include "rischan/geometry.hpp"
#include "rischan/linkbudget.hpp"
#include "rischan/pathloss.hpp"
#include "rischan/ris.hpp"

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace rischan {

/// Full description of one RIS-assisted downlink.
///
/// Defaults reproduce the reference setup: 30 GHz carrier, lambda/2 RIS
/// spacing, 30 dBm transmit power, 0 dBi gains, BS at (0, 0, 10) and RIS at
/// (-50, 50, 10) (d1 = 70.71 m), UE 15 m from the RIS along +x.
struct ScenarioConfig
{
    LinkEnvironment env;
    Placement bs_ris{70.71, {3.0 * std::numbers::pi / 4.0, std::numbers::pi / 2.0}};
    Placement ris_ue{15.0, {0.0, std::numbers::pi / 2.0}};
    Scenario scenario = Scenario::mono_path();

    std::size_t ris_elements = 1000;
    std::size_t ris_rows = 0; // 0: most square layout
    double ris_spacing_wavelengths = 0.5;
    double ris_reflection = 1.0;

    std::size_t bs_antennas_h = 1;
    std::size_t bs_antennas_v = 1;
    std::size_t ue_antennas_h = 1;
    std::size_t ue_antennas_v = 1;

    double p_t_dbm = 30.0;
    double g_t_dbi = 0.0;
    double g_r_dbi = 0.0;

    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t threads = 0;

    // Direct BS-UE distance; derived from the RIS geometry when absent.
    std::optional<double> direct_distance_m;
    std::vector<double> blockage_levels_db{35.0, 50.0};

    double random_phase_max = std::numbers::pi;
    double shadow_delta = 1.8;
    ShadowingLinks shadowing_links = ShadowingLinks::Both;
    double foliage_curve_rate_db_per_m = 0.4;
    double foliage_curve_depth_m = 10.0;

    // Throws std::invalid_argument naming the config key at fault.
    void validate() const;

    double wavelength() const { return env.wavelength(); }
    LinkGains gains() const;
    RisLinkGeometry link_geometry() const { return {bs_ris.separation, ris_ue.separation}; }
    RisConfig ris_for(std::size_t n) const;
    ArrayGeometry bs_array() const;
    ArrayGeometry ue_array() const;
    bool siso() const;
};

// Channels and geometry of one drop.
struct ThreeStepChannels
{
    PathSet bs_ris_paths;
    PathSet ris_ue_paths;
    PathSet direct_paths;
    ChannelMatrix H;  // N x M_t
    ChannelMatrix G;  // M_r x N
    ChannelMatrix Hd; // M_r x M_t

    Position ris_in_bs;
    Position ue_in_ris;
    Position ue_in_bs;
    Placement ue_placement; // UE seen from the BS
    double direct_distance = 0.0;

    double p_r1_w = 0.0; // LoS power received at the RIS
    double p_t2_w = 0.0; // power re-radiated by the RIS
    double p_r2_w = 0.0; // LoS power received at the UE through the RIS hop
};

// Step 1: BS -> RIS channel H from the BS-RIS placement.
// Step 2: RIS -> UE channel G with the RIS transmitting rho^2 P_r1.
// Step 3: UE position in the BS frame by frame composition, then H_d.
ThreeStepChannels compose_three_step(const ScenarioConfig &cfg, const RisConfig &ris, Rng &rng);
ThreeStepChannels compose_three_step(const ScenarioConfig &cfg, Rng &rng);

struct SweepColumn
{
    std::string name;
    std::string unit;
    std::vector<double> values;
};

// Rows of one experiment: an axis column plus one column per curve.
struct SweepResult
{
    SweepColumn axis;
    std::vector<SweepColumn> curves;
    std::vector<std::string> notes;
    std::vector<std::string> warnings;

    // Throws std::logic_error on ragged or non-finite columns.
    void validate() const;
    const SweepColumn &curve(const std::string &name) const;
    bool has_curve(const std::string &name) const;
};

enum class Curve
{
    Optimal,      // closed form with aligned phases
    RandomPhase,  // Monte Carlo mean over drops with random RIS phases
    Shadowed,     // closed form with the configured shadow draw
    Foliage,      // closed form minus the foliage-curve loss
    Direct,       // direct link, no blockage
    BlockedDirect // direct link, one column per blockage level
};

SweepResult sweep_elements(const ScenarioConfig &cfg,
                           const std::vector<std::size_t> &n_values,
                           const std::vector<Curve> &curves);

// Closed-form power along d1 / (d1 + d2) for a fixed total, restricted to
// the far-field interval (d_min / total, 1 - d_min / total). The grid is
// mirror-symmetric; an odd step count places a point exactly at 0.5.
// Throws std::invalid_argument when total <= 2 d_min.
SweepResult sweep_distance_split(const ScenarioConfig &cfg, double total, std::size_t steps);

// Monte Carlo statistics (mean, median, 10 % and 90 % quantiles) of the
// multipath received power with random RIS phases, per scenario and N.
SweepResult sweep_scenario(const ScenarioConfig &cfg,
                           const std::vector<std::size_t> &n_values,
                           const std::vector<ScenarioKind> &scenarios,
                           std::size_t trials);

// Sample quantile with linear interpolation between order statistics.
double quantile(std::vector<double> values, double q);

} // namespace rischan
