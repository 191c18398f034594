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

#include "rischan/channel.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <set>

using namespace rischan;
using rischan::test::kPi;

namespace {

const ArrayGeometry kSiso{1, 1, 0.005};

// Outer-product sum written out element by element from the path list.
ChannelMatrix brute_force_channel(const PathSet &ps)
{
    auto entry = [&](const ArrayGeometry &g, const Direction &dir, std::size_t idx) {
        const std::size_t p = idx % g.m_h;
        const std::size_t q = idx / g.m_h;
        const double el = kPi / 2.0 - dir.polar;
        const double arg = -2.0 * kPi * g.spacing / ps.wavelength *
                           (p * std::cos(dir.azimuth) * std::cos(el) + q * std::sin(el));
        return std::polar(1.0, arg);
    };
    const std::size_t rows = ps.rx_geom.size(), cols = ps.tx_geom.size();
    ChannelMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
        {
            cdouble acc = 0.0;
            for (const auto &path : ps.paths)
                acc += path.amplitude * std::polar(1.0, path.phase) * entry(ps.rx_geom, path.aoa, r) *
                       std::conj(entry(ps.tx_geom, path.aod, c));
            out(r, c) = acc;
        }
    return out;
}

PathSet random_path_set(std::mt19937_64 &rng, std::size_t n_paths, ArrayGeometry tx, ArrayGeometry rx)
{
    PathSet ps;
    ps.tx_geom = tx;
    ps.rx_geom = rx;
    ps.wavelength = 0.01;
    double amp = test::uniform(rng, 0.1, 1.0);
    for (std::size_t k = 0; k < n_paths; ++k)
    {
        ps.paths.push_back({amp,
                            test::uniform(rng, 0.0, 2.0 * kPi),
                            {test::uniform(rng, 0.0, 2.0 * kPi), test::uniform(rng, 0.2, kPi - 0.2)},
                            {test::uniform(rng, 0.0, 2.0 * kPi), test::uniform(rng, 0.2, kPi - 0.2)}});
        amp *= test::uniform(rng, 0.3, 1.0);
    }
    return ps;
}

} // namespace

TEST_CASE("mono-path draw uses the distance-only LoS amplitude")
{
    LinkEnvironment env;
    const Placement placement{70.71, {2.0, kPi / 2.0}};
    Rng rng(1);
    const PathSet ps = draw_path_set(Scenario::mono_path(), env, placement, kSiso, kSiso, rng);
    REQUIRE(ps.paths.size() == 1);

    const double lambda = 3e8 / 30e9;
    const double expected = std::sqrt(std::pow(lambda / (4.0 * kPi * 1.0), 2) * std::pow(1.0 / 70.71, 2.0));
    CHECK(ps.paths[0].amplitude == doctest::Approx(expected).epsilon(1e-13));
    CHECK(ps.paths[0].aod == placement.direction);
    CHECK(ps.paths[0].aoa.azimuth == doctest::Approx(2.0 + kPi));
    CHECK(ps.paths[0].aoa.polar == doctest::Approx(kPi / 2.0));
}

TEST_CASE("foliage and atmosphere reduce the LoS amplitude")
{
    LinkEnvironment clean, lossy;
    lossy.foliage_rate_db_per_m = 0.4;
    lossy.foliage_depth_m = 10.0;
    lossy.atmospheric_db_per_m = 0.01;
    const Placement placement{50.0, {0.0, kPi / 2.0}};
    Rng a(5), b(5);
    const double clean_amp = draw_path_set(Scenario::mono_path(), clean, placement, kSiso, kSiso, a).paths[0].amplitude;
    const double lossy_amp = draw_path_set(Scenario::mono_path(), lossy, placement, kSiso, kSiso, b).paths[0].amplitude;
    CHECK(20.0 * std::log10(clean_amp / lossy_amp) == doctest::Approx(4.0 + 0.5).epsilon(1e-12));
}

TEST_CASE("scenario path counts stay within range")
{
    LinkEnvironment env;
    const Placement placement{40.0, {1.0, kPi / 2.0}};
    std::set<std::size_t> rma_counts, umi_counts;
    for (std::uint64_t seed = 0; seed < 500; ++seed)
    {
        Rng r1 = make_stream(seed, 0), r2 = make_stream(seed, 1);
        const PathSet rma = draw_path_set(Scenario::rma(), env, placement, kSiso, kSiso, r1);
        const PathSet umi = draw_path_set(Scenario::umi(), env, placement, kSiso, kSiso, r2);
        rma_counts.insert(rma.paths.size());
        umi_counts.insert(umi.paths.size());
        for (const PathSet *ps : {&rma, &umi})
            for (std::size_t k = 1; k < ps->paths.size(); ++k)
                REQUIRE(ps->paths[k].amplitude <= ps->paths[k - 1].amplitude);
    }
    CHECK(rma_counts == std::set<std::size_t>{1, 2});
    CHECK(*umi_counts.begin() >= 1);
    CHECK(*umi_counts.rbegin() <= 30);
    CHECK(umi_counts.size() > 20);
}

TEST_CASE("NLoS amplitudes decay by the configured dB per path index")
{
    LinkEnvironment env;
    Scenario umi = Scenario::umi();
    umi.min_paths = umi.max_paths = 5;
    umi.nlos_decay_db = 2.5;
    Rng rng(9);
    const PathSet ps = draw_path_set(umi, env, {30.0, {0.0, kPi / 2.0}}, kSiso, kSiso, rng);
    REQUIRE(ps.paths.size() == 5);
    for (std::size_t k = 1; k < 5; ++k)
    {
        CHECK(20.0 * std::log10(ps.paths[0].amplitude / ps.paths[k].amplitude) == doctest::Approx(2.5 * k));
        CHECK(std::abs(ps.paths[k].aod.polar - kPi / 2.0) <= umi.nlos_elevation_band);
        CHECK(std::abs(ps.paths[k].aoa.polar - kPi / 2.0) <= umi.nlos_elevation_band);
    }
}

TEST_CASE("draws are deterministic per seed")
{
    LinkEnvironment env;
    const Placement placement{25.0, {0.4, 1.4}};
    const ArrayGeometry ris{4, 2, 0.005};
    Rng a = make_stream(77, 3), b = make_stream(77, 3), c = make_stream(78, 3);
    const PathSet pa = draw_path_set(Scenario::umi(), env, placement, kSiso, ris, a);
    const PathSet pb = draw_path_set(Scenario::umi(), env, placement, kSiso, ris, b);
    const PathSet pc = draw_path_set(Scenario::umi(), env, placement, kSiso, ris, c);
    CHECK(pa == pb);
    CHECK_FALSE(pa == pc);
}

TEST_CASE("realize_channel small cases")
{
    PathSet ps;
    ps.tx_geom = ps.rx_geom = kSiso;
    ps.paths.push_back({0.25, 1.1, {}, {}});
    const ChannelMatrix h = realize_channel(ps);
    REQUIRE(h.rows() == 1);
    REQUIRE(h.cols() == 1);
    CHECK(std::abs(h(0, 0) - std::polar(0.25, 1.1)) < 1e-15);
}

TEST_CASE("BS-to-RIS mono-path column carries the RIS steering phases")
{
    LinkEnvironment env;
    const ArrayGeometry ris = square_layout(12, env.wavelength() / 2.0);
    Rng rng(4);
    const PathSet ps = draw_path_set(Scenario::mono_path(), env, {60.0, {0.7, 1.3}}, kSiso, ris, rng);
    const ChannelMatrix H = realize_channel(ps);
    REQUIRE(H.rows() == 12);
    REQUIRE(H.cols() == 1);
    const Eigen::VectorXd z = steering_phases(ris, ps.paths[0].aoa, ps.wavelength);
    for (Eigen::Index i = 0; i < 12; ++i)
        CHECK(std::abs(H(i, 0) - std::polar(ps.paths[0].amplitude, ps.paths[0].phase + z[i])) < 1e-15);
}

TEST_CASE("two-path 2x2 channel matches the brute-force sum")
{
    std::mt19937_64 rng(21);
    const PathSet ps = random_path_set(rng, 2, {2, 1, 0.005}, {2, 1, 0.005});
    const ChannelMatrix got = realize_channel(ps);
    const ChannelMatrix want = brute_force_channel(ps);
    CHECK((got - want).norm() < 1e-13);
}

TEST_CASE("property: rank bound and mono-path energy")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial)
    {
        const std::size_t n_paths = 1 + rng() % 3;
        const PathSet ps = random_path_set(rng, n_paths, {3, 2, 0.005}, {2, 2, 0.005});
        const ChannelMatrix h = realize_channel(ps);
        CHECK((h - brute_force_channel(ps)).norm() < 1e-12);
        const Eigen::JacobiSVD<ChannelMatrix> svd(h);
        const auto &sv = svd.singularValues();
        Eigen::Index rank = 0;
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            rank += sv[i] > 1e-10 ? 1 : 0;
        CHECK(rank <= static_cast<Eigen::Index>(n_paths));
    }
    for (int trial = 0; trial < 50; ++trial)
    {
        const PathSet ps = random_path_set(rng, 1, {1 + rng() % 5, 1 + rng() % 3, 0.005}, {1 + rng() % 4, 2, 0.005});
        const ChannelMatrix h = realize_channel(ps);
        const double alpha = ps.paths[0].amplitude;
        const double expected = alpha * alpha * ps.tx_geom.size() * ps.rx_geom.size();
        CHECK(h.squaredNorm() == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("PathSet JSON round trip")
{
    LinkEnvironment env;
    for (std::uint64_t seed = 0; seed < 20; ++seed)
    {
        Rng rng = make_stream(seed, 0);
        const PathSet ps = draw_path_set(Scenario::umi(), env, {33.0, {0.2, 1.5}}, kSiso, {3, 2, 0.005}, rng);
        const nlohmann::json doc = ps;
        const PathSet back = nlohmann::json::parse(doc.dump()).get<PathSet>();
        CHECK(back == ps);
    }
    CHECK_THROWS(nlohmann::json::parse(R"({"paths": [], "tx_geom": {"m_h":1,"m_v":1,"spacing":0.005},
        "rx_geom": {"m_h":1,"m_v":1,"spacing":0.005}, "wavelength": 0.01})")
                     .get<PathSet>());
}

TEST_CASE("scenario names")
{
    CHECK(parse_scenario_kind("RMa") == ScenarioKind::RMa);
    CHECK(parse_scenario_kind("umi") == ScenarioKind::UMi);
    CHECK(parse_scenario_kind("mono") == ScenarioKind::MonoPath);
    CHECK_THROWS_AS(parse_scenario_kind("uma"), std::invalid_argument);
}
