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

#include "rischan/linkbudget.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rischan {

void RisLinkGeometry::validate() const
{
    if (!std::isfinite(d1) || !std::isfinite(d2) || d1 <= 0.0 || d2 <= 0.0)
        throw std::invalid_argument("RIS link distances must be positive");
}

void BlockageModel::validate() const
{
    if (!std::isfinite(eta_db) || eta_db < 0.0)
        throw std::invalid_argument("blockage attenuation must be >= 0 dB");
}

double optimal_received_power(const LinkEnvironment &env,
                              const RisLinkGeometry &geom,
                              std::size_t n,
                              const LinkGains &gains)
{
    geom.validate();
    const double q = env.wavelength() / (4.0 * std::numbers::pi);
    const double q2 = q * q;
    const double count = static_cast<double>(n);
    return gains.scale() * (q2 * q2) * std::pow(env.d0, 2.0 * env.mu - 4.0) /
           std::pow(geom.d1 * geom.d2, env.mu) * (count * count);
}

double optimal_received_power_shadowed(const LinkEnvironment &env,
                                       const RisLinkGeometry &geom,
                                       std::size_t n,
                                       const LinkGains &gains,
                                       double delta,
                                       ShadowingLinks links)
{
    const double divisor = links == ShadowingLinks::Both ? 5.0 : 10.0;
    return optimal_received_power(env, geom, n, gains) * std::pow(10.0, -env.shadow_sigma_db * delta / divisor);
}

double rayleigh_distance(std::size_t n, double wavelength)
{
    const double area = wavelength * wavelength / 4.0 * static_cast<double>(n);
    return 2.0 * area / wavelength;
}

std::size_t far_field_max_elements(const RisLinkGeometry &geom, double wavelength)
{
    geom.validate();
    const double bound = 2.0 * std::min(geom.d1, geom.d2) / wavelength;
    // absorb rounding from lambda = c / f so exact ratios are not floored down
    return static_cast<std::size_t>(std::floor(bound * (1.0 + 1e-12)));
}

bool far_field_ok(const RisLinkGeometry &geom, std::size_t n, double wavelength)
{
    return n <= far_field_max_elements(geom, wavelength);
}

double direct_link_power(const LinkEnvironment &env,
                         double d,
                         double p_t_dbm,
                         std::optional<BlockageModel> blockage,
                         double g_t_dbi,
                         double g_r_dbi)
{
    double eta = 0.0;
    if (blockage)
    {
        blockage->validate();
        eta = blockage->eta_db;
    }
    return received_power_dbm(p_t_dbm + g_t_dbi + g_r_dbi, total_path_loss(env, d)) - eta;
}

} // namespace rischan
