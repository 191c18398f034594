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

#include <numbers>

namespace rischan {

// Point in a Cartesian frame, meters. Frames centered at BS, RIS and UE are
// pure translations of one another (parallel axes).
struct Position
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Position operator+(const Position &a, const Position &b)
    {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Position operator-(const Position &a, const Position &b)
    {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend bool operator==(const Position &, const Position &) = default;

    double norm() const;
    double horizontal_norm() const;
};

// Azimuth and polar elevation (measured from +z), radians.
// The horizontal plane is polar = pi/2.
struct Direction
{
    double azimuth = 0.0;
    double polar = std::numbers::pi / 2.0;

    friend bool operator==(const Direction &, const Direction &) = default;

    // Elevation measured from the horizontal plane (pi/2 - polar).
    double elevation() const { return std::numbers::pi / 2.0 - polar; }

    // Direction pointing the opposite way (azimuth + pi, polar mirrored).
    Direction reversed() const;
};

// Horizontal-plane TX-RX separation plus the direction of RX seen from TX.
struct Placement
{
    double separation = 1.0;
    Direction direction;

    friend bool operator==(const Placement &, const Placement &) = default;
};

// Spherical placement -> Cartesian offset, slant range rho = separation / sin(polar).
// Throws std::invalid_argument("slant range undefined") if sin(polar) <= 0
// and std::invalid_argument for non-positive or non-finite separation.
Position placement_to_cartesian(const Placement &p);

// Frame R' origin expressed in R plus a point expressed in R' -> point in R.
Position compose_frames(const Position &origin_in_parent, const Position &point_in_child);

// Inverse of placement_to_cartesian. Azimuth is returned in [0, 2*pi).
// Throws std::invalid_argument("azimuth undefined") on the z-axis.
Placement cartesian_to_placement(const Position &pos);

// Wrap an angle to [0, 2*pi).
double wrap_two_pi(double angle);

} // namespace rischan
