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

#include "rischan/pathloss.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rischan {

namespace {

void require(bool ok, const char *field, const char *what)
{
    if (!ok)
        throw std::invalid_argument(std::string(field) + ": " + what);
}

void check_distance(const LinkEnvironment &env, double d)
{
    if (!std::isfinite(d))
        throw std::invalid_argument("distance must be finite");
    if (d < env.d0)
        throw std::invalid_argument("inside reference distance");
}

} // namespace

void LinkEnvironment::validate() const
{
    require(std::isfinite(frequency_hz) && frequency_hz > 0.0, "frequency", "must be > 0");
    require(std::isfinite(d0) && d0 > 0.0, "d0", "must be > 0");
    require(std::isfinite(mu) && mu > 0.0, "mu", "must be > 0");
    require(std::isfinite(shadow_sigma_db) && shadow_sigma_db >= 0.0, "shadow_sigma", "must be >= 0");
    require(std::isfinite(atmospheric_db_per_m) && atmospheric_db_per_m >= 0.0, "atmospheric", "must be >= 0");
    require(std::isfinite(foliage_rate_db_per_m) && foliage_rate_db_per_m >= 0.0 && foliage_rate_db_per_m <= 10.0,
            "foliage_rate", "must lie in [0, 10] dB/m");
    require(std::isfinite(foliage_depth_m) && foliage_depth_m >= 0.0, "foliage_depth", "must be >= 0");
}

double free_space_loss(const LinkEnvironment &env)
{
    return 20.0 * std::log10(4.0 * std::numbers::pi * env.d0 / env.wavelength());
}

double excess_loss(const LinkEnvironment &env, double d)
{
    return env.atmospheric_db_per_m * d + env.foliage_rate_db_per_m * env.foliage_depth_m;
}

double total_path_loss(const LinkEnvironment &env, double d, std::optional<ShadowDraw> shadow)
{
    check_distance(env, d);
    const double shadowing = shadow ? env.shadow_sigma_db * shadow->delta : 0.0;
    return free_space_loss(env) + 10.0 * env.mu * std::log10(d / env.d0) + shadowing + excess_loss(env, d);
}

double received_power_watts(double p_tx_w, const LinkEnvironment &env, double d)
{
    check_distance(env, d);
    const double anchor = env.wavelength() / (4.0 * std::numbers::pi * env.d0);
    return p_tx_w * anchor * anchor * std::pow(env.d0 / d, env.mu);
}

} // namespace rischan
