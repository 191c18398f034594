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

#include "rischan/arrays.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rischan {

void ArrayGeometry::validate() const
{
    if (m_h < 1 || m_v < 1)
        throw std::invalid_argument("array element counts must be >= 1");
    if (!std::isfinite(spacing) || spacing <= 0.0)
        throw std::invalid_argument("array spacing must be positive");
}

ArrayGeometry square_layout(std::size_t n, double spacing)
{
    if (n == 0)
        throw std::invalid_argument("array must have at least one element");
    std::size_t rows = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (rows > 1 && n % rows != 0)
        --rows;
    if (rows == 0)
        rows = 1;
    return {n / rows, rows, spacing};
}

Eigen::VectorXd steering_phases(const ArrayGeometry &geom, const Direction &dir, double wavelength)
{
    geom.validate();
    if (!(wavelength > 0.0))
        throw std::invalid_argument("wavelength must be positive");

    const double el = dir.elevation();
    const double k = -2.0 * std::numbers::pi * geom.spacing / wavelength;
    const double step_h = k * std::cos(dir.azimuth) * std::cos(el);
    const double step_v = k * std::sin(el);

    Eigen::VectorXd out(static_cast<Eigen::Index>(geom.size()));
    for (std::size_t q = 0; q < geom.m_v; ++q)
        for (std::size_t p = 0; p < geom.m_h; ++p)
            out[static_cast<Eigen::Index>(q * geom.m_h + p)] =
                static_cast<double>(p) * step_h + static_cast<double>(q) * step_v;
    return out;
}

ComplexVector steering_vector(const ArrayGeometry &geom, const Direction &dir, double wavelength)
{
    const Eigen::VectorXd phase = steering_phases(geom, dir, wavelength);
    ComplexVector out(phase.size());
    for (Eigen::Index i = 0; i < phase.size(); ++i)
        out[i] = std::polar(1.0, phase[i]);
    return out;
}

} // namespace rischan
