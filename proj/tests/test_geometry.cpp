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

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace rischan;
using rischan::test::kPi;

TEST_CASE("placement_to_cartesian reproduces the reference RIS position")
{
    const Position offset = placement_to_cartesian({70.71, {3.0 * kPi / 4.0, kPi / 2.0}});
    // 70.71 / sqrt(2) = 49.9995, quoted as 50 in the scenario description
    CHECK(offset.x == doctest::Approx(-50.0).epsilon(1e-5));
    CHECK(offset.y == doctest::Approx(50.0).epsilon(1e-5));
    CHECK(std::abs(offset.z) < 1e-12);

    const Position bs{0.0, 0.0, 10.0};
    const Position ris = compose_frames(bs, offset);
    CHECK(ris.x == doctest::Approx(-50.0).epsilon(1e-5));
    CHECK(ris.y == doctest::Approx(50.0).epsilon(1e-5));
    CHECK(ris.z == doctest::Approx(10.0));
}

TEST_CASE("placement_to_cartesian hand-evaluated cases")
{
    const Position unit = placement_to_cartesian({1.0, {0.0, kPi / 2.0}});
    CHECK(unit.x == doctest::Approx(1.0));
    CHECK(std::abs(unit.y) < 1e-15);
    CHECK(std::abs(unit.z) < 1e-15);

    // rho = 10 / sin(pi/4): x = 0, y = 10, z = rho cos(pi/4) = 10
    const Position p = placement_to_cartesian({10.0, {kPi / 2.0, kPi / 4.0}});
    CHECK(std::abs(p.x) < 1e-12);
    CHECK(p.y == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(p.z == doctest::Approx(10.0).epsilon(1e-14));
}

TEST_CASE("degenerate elevations have no slant range")
{
    CHECK_THROWS_WITH_AS(placement_to_cartesian({5.0, {0.3, 0.0}}), "slant range undefined", std::invalid_argument);
    CHECK_THROWS_WITH_AS(placement_to_cartesian({5.0, {0.3, kPi}}), "slant range undefined", std::invalid_argument);
    CHECK_THROWS_AS(placement_to_cartesian({0.0, {0.3, kPi / 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(placement_to_cartesian({-1.0, {0.3, kPi / 2.0}}), std::invalid_argument);
}

TEST_CASE("compose_frames")
{
    const Position ue = compose_frames({-50.0, 50.0, 0.0}, {15.0, 0.0, 0.0});
    CHECK(ue == Position{-35.0, 50.0, 0.0});

    const Position p{1.5, -2.25, 3.0};
    CHECK(compose_frames(p, {}) == p);
    CHECK(compose_frames({1.0, 2.0, 3.0}, {-1.0, -2.0, -3.0}) == Position{});
}

TEST_CASE("cartesian_to_placement")
{
    const Placement ue = cartesian_to_placement({-35.0, 50.0, 0.0});
    CHECK(ue.separation == doctest::Approx(61.032778078668514).epsilon(1e-14));
    CHECK(ue.direction.azimuth == doctest::Approx(2.1815222911841055).epsilon(1e-14));
    CHECK(ue.direction.polar == doctest::Approx(kPi / 2.0).epsilon(1e-15));

    // brute-force inverse check
    const Position back = placement_to_cartesian(ue);
    CHECK(back.x == doctest::Approx(-35.0).epsilon(1e-13));
    CHECK(back.y == doctest::Approx(50.0).epsilon(1e-13));

    const Placement unit = cartesian_to_placement({1.0, 0.0, 0.0});
    CHECK(unit.separation == 1.0);
    CHECK(unit.direction.azimuth == 0.0);
    CHECK(unit.direction.polar == doctest::Approx(kPi / 2.0));

    CHECK_THROWS_WITH_AS(cartesian_to_placement({0.0, 0.0, 5.0}), "azimuth undefined", std::invalid_argument);
    CHECK_THROWS_WITH_AS(cartesian_to_placement({}), "azimuth undefined", std::invalid_argument);
}

TEST_CASE("reference BS-RIS separation from absolute positions")
{
    const Placement d1 = cartesian_to_placement(Position{-50.0, 50.0, 10.0} - Position{0.0, 0.0, 10.0});
    CHECK(std::abs(d1.separation - 70.71) <= 0.01);
    CHECK(d1.direction.azimuth == doctest::Approx(3.0 * kPi / 4.0));
}

TEST_CASE("property: spherical round trip")
{
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 20000; ++i)
    {
        const Placement p{std::exp(test::uniform(rng, std::log(0.1), std::log(1e4))),
                          {test::uniform(rng, 0.0, 2.0 * kPi), test::uniform(rng, 0.05, kPi - 0.05)}};
        const Position pos = placement_to_cartesian(p);
        const Placement back = cartesian_to_placement(pos);
        REQUIRE(test::rel_close_strict(back.separation, p.separation, 1e-9));
        REQUIRE(test::angle_gap(back.direction.azimuth, p.direction.azimuth) <= 1e-9 * 2.0 * kPi);
        REQUIRE(test::rel_close(back.direction.polar, p.direction.polar, 1e-9));
        // horizontal-distance identity
        REQUIRE(back.separation == std::hypot(pos.x, pos.y));
    }
}

TEST_CASE("property: frame composition is associative with zero identity")
{
    std::mt19937_64 rng(7);
    auto draw = [&] {
        return Position{test::uniform(rng, -1e3, 1e3), test::uniform(rng, -1e3, 1e3), test::uniform(rng, -1e3, 1e3)};
    };
    for (int i = 0; i < 1000; ++i)
    {
        const Position a = draw(), b = draw(), c = draw();
        const Position left = compose_frames(compose_frames(a, b), c);
        const Position right = compose_frames(a, compose_frames(b, c));
        CHECK(std::abs(left.x - right.x) <= 1e-12 * 3e3);
        CHECK(std::abs(left.y - right.y) <= 1e-12 * 3e3);
        CHECK(std::abs(left.z - right.z) <= 1e-12 * 3e3);
        CHECK(compose_frames(a, {}) == a);
        CHECK(compose_frames({}, a) == a);
    }
}

TEST_CASE("wrap_two_pi")
{
    CHECK(wrap_two_pi(0.0) == 0.0);
    CHECK(wrap_two_pi(-kPi / 2.0) == doctest::Approx(1.5 * kPi));
    CHECK(wrap_two_pi(5.0 * kPi) == doctest::Approx(kPi));
    CHECK(wrap_two_pi(-1e-18) < 2.0 * kPi);
}
