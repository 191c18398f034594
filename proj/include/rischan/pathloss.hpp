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

#include <cmath>
#include <optional>

namespace rischan {

// Propagation speed used for every wavelength in the library. The rounded
// value maps 30 GHz to a 1 cm wavelength, which the far-field element bound
// and the reference link budgets are quoted against.
inline constexpr double kSpeedOfLight = 3.0e8;

inline double wavelength_for(double frequency_hz) { return kSpeedOfLight / frequency_hz; }

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

/// Radio environment of one TX-RX link.
///
/// Loss terms follow the log-distance model with a free-space anchor at d0:
/// free space at d0, distance term 10 mu log10(d / d0), shadowing s * delta,
/// atmospheric attenuation A_t * d and foliage A_Fol * d_Fol.
struct LinkEnvironment
{
    double frequency_hz = 30e9;
    double d0 = 1.0;                  // reference distance, m
    double mu = 2.0;                  // path-loss exponent
    double shadow_sigma_db = 4.0;     // s
    double atmospheric_db_per_m = 0.0; // A_t
    double foliage_rate_db_per_m = 0.0; // A_Fol, within [0, 10]
    double foliage_depth_m = 0.0;     // d_Fol

    double wavelength() const { return wavelength_for(frequency_hz); }

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

// Standard-normal shadowing draw delta (dimensionless).
struct ShadowDraw
{
    double delta = 0.0;
};

// 20 log10(4 pi d0 / lambda), dB.
double free_space_loss(const LinkEnvironment &env);

// A_t * d + A_Fol * d_Fol, dB.
double excess_loss(const LinkEnvironment &env, double d);

// Sum of all five loss terms at distance d. A missing shadow draw adds 0 dB.
// Throws std::invalid_argument("inside reference distance") when d < d0.
double total_path_loss(const LinkEnvironment &env, double d, std::optional<ShadowDraw> shadow = std::nullopt);

inline double received_power_dbm(double p_tx_dbm, double loss_db) { return p_tx_dbm - loss_db; }

// P_tx (lambda / (4 pi d0))^2 (d0 / d)^mu. Shadowing, atmospheric and foliage
// terms are ignored (the simplified regime of the closed-form link budget).
double received_power_watts(double p_tx_w, const LinkEnvironment &env, double d);

} // namespace rischan
