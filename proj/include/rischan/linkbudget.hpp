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

#include "rischan/pathloss.hpp"
#include "rischan/ris.hpp"

#include <cstddef>
#include <optional>

namespace rischan {

// BS-RIS (d1) and RIS-UE (d2) separations, meters.
struct RisLinkGeometry
{
    double d1 = 1.0;
    double d2 = 1.0;

    void validate() const;
};

// Extra attenuation eta (dB) on the direct BS-UE link.
struct BlockageModel
{
    double eta_db = 0.0;

    void validate() const;
};

// How a single shadowing draw applies to the cascaded link.
enum class ShadowingLinks
{
    Both,   // both hops share delta: factor 10^(-s delta / 5)
    Single, // one hop shadowed: factor 10^(-s delta / 10)
};

// Far-field received power through an RIS with optimally aligned phases:
//   P_t G_t G_r (lambda / 4 pi)^4 d0^(2 mu - 4) / (d1 d2)^mu * N^2
// The formula is evaluated regardless of the far-field condition; callers
// check far_field_ok and report violations as warnings.
double optimal_received_power(const LinkEnvironment &env,
                              const RisLinkGeometry &geom,
                              std::size_t n,
                              const LinkGains &gains);

// optimal_received_power scaled by the shadowing factor of the cascaded link.
double optimal_received_power_shadowed(const LinkEnvironment &env,
                                       const RisLinkGeometry &geom,
                                       std::size_t n,
                                       const LinkGains &gains,
                                       double delta,
                                       ShadowingLinks links = ShadowingLinks::Both);

// Rayleigh distance of an n-element surface with lambda/2 pitch: 2 S / lambda
// with S = n lambda^2 / 4.
double rayleigh_distance(std::size_t n, double wavelength);

// floor(2 min(d1, d2) / lambda): largest n whose Rayleigh distance stays
// within both hops.
std::size_t far_field_max_elements(const RisLinkGeometry &geom, double wavelength);

bool far_field_ok(const RisLinkGeometry &geom, std::size_t n, double wavelength);

// P_t - PL(d) - eta in dBm, with PL from total_path_loss without shadowing.
// Antenna gains (dBi) are added to the transmit power.
double direct_link_power(const LinkEnvironment &env,
                         double d,
                         double p_t_dbm,
                         std::optional<BlockageModel> blockage = std::nullopt,
                         double g_t_dbi = 0.0,
                         double g_r_dbi = 0.0);

} // namespace rischan
