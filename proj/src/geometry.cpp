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

#include "rischan/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace rischan {

double Position::norm() const
{
    return std::sqrt(x * x + y * y + z * z);
}

double Position::horizontal_norm() const
{
    return std::hypot(x, y);
}

Direction Direction::reversed() const
{
    return {wrap_two_pi(azimuth + std::numbers::pi), std::numbers::pi - polar};
}

double wrap_two_pi(double angle)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(angle, two_pi);
    if (w < 0.0)
        w += two_pi;
    // fmod of a value just below zero can round up to exactly 2*pi
    if (w >= two_pi)
        w = 0.0;
    return w;
}

Position placement_to_cartesian(const Placement &p)
{
    if (!std::isfinite(p.separation) || p.separation <= 0.0)
        throw std::invalid_argument("separation must be positive and finite");
    if (!std::isfinite(p.direction.azimuth) || !std::isfinite(p.direction.polar))
        throw std::invalid_argument("direction must be finite");

    const double sin_polar = std::sin(p.direction.polar);
    if (!(sin_polar > 0.0) || p.direction.polar <= 0.0 || p.direction.polar >= std::numbers::pi)
        throw std::invalid_argument("slant range undefined");

    // rho * sin(polar) is the separation itself; use it directly so the
    // horizontal distance of the result matches to rounding.
    const double rho = p.separation / sin_polar;
    return {p.separation * std::cos(p.direction.azimuth),
            p.separation * std::sin(p.direction.azimuth),
            rho * std::cos(p.direction.polar)};
}

Position compose_frames(const Position &origin_in_parent, const Position &point_in_child)
{
    return origin_in_parent + point_in_child;
}

Placement cartesian_to_placement(const Position &pos)
{
    if (!std::isfinite(pos.x) || !std::isfinite(pos.y) || !std::isfinite(pos.z))
        throw std::invalid_argument("position must be finite");

    const double horizontal = pos.horizontal_norm();
    if (horizontal == 0.0)
        throw std::invalid_argument("azimuth undefined");

    const double rho = pos.norm();
    Placement out;
    out.direction.polar = std::acos(pos.z / rho);
    out.direction.azimuth = wrap_two_pi(std::atan2(pos.y, pos.x));
    out.separation = horizontal;
    return out;
}

} // namespace rischan
