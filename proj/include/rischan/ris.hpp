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
#include "rischan/channel.hpp"
#include "rischan/random.hpp"

#include <cstddef>

namespace rischan {

// Passive reflecting surface: element layout, per-element phase shifts psi_i
// and reflection magnitudes rho_i in [0, 1].
struct RisConfig
{
    ArrayGeometry geometry;
    Eigen::VectorXd phases;
    Eigen::VectorXd reflection;

    std::size_t n() const { return geometry.size(); }

    // Throws std::invalid_argument on size mismatch or rho outside [0, 1].
    void validate() const;

    // n elements in the most square layout, lambda/2 spacing, psi = 0, rho = 1.
    static RisConfig uniform(std::size_t n, double wavelength);
};

// beta_i of each element; still unsummed.
struct CascadedCoefficients
{
    ComplexVector beta;
};

// Transmit-side scaling of the reflected link: P_t (W) and linear gains.
struct LinkGains
{
    double p_t_w = 1.0;
    double g_t = 1.0;
    double g_r = 1.0;

    double scale() const { return p_t_w * g_t * g_r; }
};

// beta_i = sqrt(P_t G_t G_r) h_i g_i rho_i e^{-j psi_i}.
CascadedCoefficients cascaded_coefficients(const ComplexVector &h,
                                           const ComplexVector &g,
                                           const RisConfig &cfg,
                                           const LinkGains &gains);

// |sum_i beta_i|^2, the coherent sum of the per-element contributions.
double reflected_power(const CascadedCoefficients &beta);

// psi_i = arg(h_i) + arg(g_i), wrapped to [0, 2*pi). With these phases every
// beta_i is real and non-negative, which maximizes reflected_power.
Eigen::VectorXd optimal_phases(const ComplexVector &h, const ComplexVector &g);

// i.i.d. phases uniform on [0, max_phase).
Eigen::VectorXd random_phases(std::size_t n, double max_phase, Rng &rng);

// P_t G_t G_r |G Psi H|^2 for a 1 x N RIS-UE channel G and an N x 1 BS-RIS
// channel H, with Psi = diag(rho_i e^{-j psi_i}).
double multipath_received_power(const ChannelMatrix &G,
                                const ChannelMatrix &H,
                                const RisConfig &cfg,
                                const LinkGains &gains);

} // namespace rischan
