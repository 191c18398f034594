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

#include "rischan/arrays.hpp"
#include "rischan/pathloss.hpp"
#include "rischan/random.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace rischan {

using ChannelMatrix = Eigen::MatrixXcd;

// One propagation path: amplitude, phase and the departure/arrival directions
// in the TX and RX frames.
struct PathComponent
{
    double amplitude = 0.0;
    double phase = 0.0;
    Direction aod;
    Direction aoa;

    friend bool operator==(const PathComponent &, const PathComponent &) = default;
};

// Paths of one TX-RX link, LoS first and in non-increasing amplitude order.
struct PathSet
{
    std::vector<PathComponent> paths;
    ArrayGeometry tx_geom;
    ArrayGeometry rx_geom;
    double wavelength = 0.01;

    // Throws std::invalid_argument if empty, unordered or geometries invalid.
    void validate() const;

    friend bool operator==(const PathSet &, const PathSet &) = default;
};

enum class ScenarioKind
{
    MonoPath,
    RMa,
    UMi,
};

// Path-count range and NLoS amplitude model of a propagation scenario.
struct Scenario
{
    ScenarioKind kind = ScenarioKind::MonoPath;
    std::size_t min_paths = 1;
    std::size_t max_paths = 1;
    double nlos_decay_db = 3.0;                                // power drop per path index
    double nlos_elevation_band = std::numbers::pi / 8.0;       // +/- around horizontal, radians

    static Scenario mono_path();
    static Scenario rma();  // 1..2 paths
    static Scenario umi();  // 1..30 paths
};

std::string to_string(ScenarioKind kind);
// Accepts "mono", "monopath", "rma", "umi" (case-insensitive).
ScenarioKind parse_scenario_kind(const std::string &name);

// Draws a path set for a link whose RX lies at `placement` seen from the TX.
//
// The LoS path departs along placement.direction and arrives from the reverse
// direction. Its amplitude is sqrt(P_r / P_t) for the distance-only received
// power, further reduced by any atmospheric and foliage loss of `env`. NLoS
// path k (k >= 1) is attenuated by k * nlos_decay_db and has uniform phase,
// uniform azimuths and elevations uniform within the scenario band; its AoA
// is drawn independently of its AoD. Amplitudes are power ratios, so the
// transmit power does not enter.
PathSet draw_path_set(const Scenario &scenario,
                      const LinkEnvironment &env,
                      const Placement &placement,
                      const ArrayGeometry &tx_geom,
                      const ArrayGeometry &rx_geom,
                      Rng &rng);

// sum_n alpha_n e^{j phi_n} a_rx(aoa_n) a_tx(aod_n)^H, an (M_rx x M_tx) matrix.
ChannelMatrix realize_channel(const PathSet &ps);

void to_json(nlohmann::json &j, const Direction &d);
void from_json(const nlohmann::json &j, Direction &d);
void to_json(nlohmann::json &j, const ArrayGeometry &g);
void from_json(const nlohmann::json &j, ArrayGeometry &g);
void to_json(nlohmann::json &j, const PathComponent &p);
void from_json(const nlohmann::json &j, PathComponent &p);
void to_json(nlohmann::json &j, const PathSet &ps);
void from_json(const nlohmann::json &j, PathSet &ps);

} // namespace rischan
