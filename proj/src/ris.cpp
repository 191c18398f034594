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

#include "rischan/ris.hpp"

#include "rischan/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace rischan {

void RisConfig::validate() const
{
    geometry.validate();
    const auto count = static_cast<Eigen::Index>(n());
    if (phases.size() != count)
        throw std::invalid_argument("RIS phase vector length must equal the element count");
    if (reflection.size() != count)
        throw std::invalid_argument("RIS reflection vector length must equal the element count");
    for (Eigen::Index i = 0; i < count; ++i)
    {
        if (!std::isfinite(phases[i]))
            throw std::invalid_argument("RIS phases must be finite");
        if (!(reflection[i] >= 0.0 && reflection[i] <= 1.0))
            throw std::invalid_argument("RIS reflection coefficients must lie in [0, 1]");
    }
}

RisConfig RisConfig::uniform(std::size_t n, double wavelength)
{
    RisConfig cfg;
    cfg.geometry = square_layout(n, wavelength / 2.0);
    cfg.phases = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    cfg.reflection = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
    return cfg;
}

CascadedCoefficients cascaded_coefficients(const ComplexVector &h,
                                           const ComplexVector &g,
                                           const RisConfig &cfg,
                                           const LinkGains &gains)
{
    cfg.validate();
    const auto count = static_cast<Eigen::Index>(cfg.n());
    if (h.size() != count || g.size() != count)
        throw std::invalid_argument("channel vector length does not match the RIS element count");

    const double amplitude = std::sqrt(gains.scale());
    CascadedCoefficients out;
    out.beta.resize(count);
    for (Eigen::Index i = 0; i < count; ++i)
        out.beta[i] = amplitude * h[i] * g[i] * std::polar(cfg.reflection[i], -cfg.phases[i]);
    return out;
}

double reflected_power(const CascadedCoefficients &beta)
{
    return std::norm(beta.beta.sum());
}

Eigen::VectorXd optimal_phases(const ComplexVector &h, const ComplexVector &g)
{
    if (h.size() != g.size())
        throw std::invalid_argument("h and g must have the same length");
    Eigen::VectorXd out(h.size());
    for (Eigen::Index i = 0; i < h.size(); ++i)
        out[i] = wrap_two_pi(std::arg(h[i]) + std::arg(g[i]));
    return out;
}

Eigen::VectorXd random_phases(std::size_t n, double max_phase, Rng &rng)
{
    std::uniform_real_distribution<double> dist(0.0, max_phase);
    Eigen::VectorXd out(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < out.size(); ++i)
        out[i] = dist(rng);
    return out;
}

double multipath_received_power(const ChannelMatrix &G,
                                const ChannelMatrix &H,
                                const RisConfig &cfg,
                                const LinkGains &gains)
{
    cfg.validate();
    const auto count = static_cast<Eigen::Index>(cfg.n());
    if (G.rows() != 1 || H.cols() != 1)
        throw std::invalid_argument("multipath power requires SISO endpoints (G: 1 x N, H: N x 1)");
    if (G.cols() != count || H.rows() != count)
        throw std::invalid_argument("channel dimensions do not match the RIS element count");

    cdouble acc{0.0, 0.0};
    for (Eigen::Index i = 0; i < count; ++i)
        acc += G(0, i) * std::polar(cfg.reflection[i], -cfg.phases[i]) * H(i, 0);
    return gains.scale() * std::norm(acc);
}

} // namespace rischan
