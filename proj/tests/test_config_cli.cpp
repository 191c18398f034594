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

#include "rischan/cli.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

using namespace rischan;
using rischan::test::kPi;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir()
{
    const fs::path dir = fs::temp_directory_path() / "rischan_test_config_cli";
    fs::create_directories(dir);
    return dir;
}

std::string read_file(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path &p, const std::string &text)
{
    std::ofstream(p, std::ios::binary) << text;
}

// Data section of a CSV: header name -> column.
std::map<std::string, std::vector<double>> parse_csv(const std::string &csv)
{
    std::istringstream in(csv);
    std::string line;
    std::vector<std::string> header;
    std::map<std::string, std::vector<double>> columns;
    while (std::getline(in, line))
    {
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<std::string> cells;
        std::stringstream row(line);
        for (std::string cell; std::getline(row, cell, ',');)
            cells.push_back(cell);
        if (header.empty())
        {
            header = cells;
            continue;
        }
        for (std::size_t i = 0; i < cells.size(); ++i)
            columns[header[i]].push_back(std::stod(cells[i]));
    }
    return columns;
}

std::string run_to_string(RunManifest m)
{
    std::ostringstream log, err;
    m.output_path = "-";
    REQUIRE(run(m, log, err) == kExitOk);
    return log.str();
}

} // namespace

TEST_CASE("empty config leaves the defaults")
{
    const RunConfig base = experiment_defaults(ExperimentId::Fig2);
    const RunConfig cfg = apply_config_text("", base);
    CHECK(cfg.scenario.ris_elements == 1000);
    CHECK(cfg.scenario.bs_ris.separation == 70.71);
    CHECK_NOTHROW(cfg.scenario.validate());
    CHECK(config_entries(cfg) == config_entries(base));
}

TEST_CASE("units are converted at the boundary")
{
    const RunConfig cfg = apply_config_text("frequency_ghz: 28\n"
                                            "bs_ris_azimuth_deg: 90\n"
                                            "ris_ue_polar_deg: 60\n"
                                            "random_phase_max_deg: 360\n"
                                            "scenario: umi\n"
                                            "elements: [10, 20]\n",
                                            experiment_defaults(ExperimentId::Fig2));
    CHECK(cfg.scenario.env.frequency_hz == doctest::Approx(28e9));
    CHECK(cfg.scenario.bs_ris.direction.azimuth == doctest::Approx(kPi / 2));
    CHECK(cfg.scenario.ris_ue.direction.polar == doctest::Approx(kPi / 3));
    CHECK(cfg.scenario.random_phase_max == doctest::Approx(2 * kPi));
    CHECK(cfg.scenario.scenario.kind == ScenarioKind::UMi);
    CHECK(cfg.sweep.elements == std::vector<std::size_t>{10, 20});
}

TEST_CASE("config errors carry the key and line")
{
    const RunConfig base = experiment_defaults(ExperimentId::Fig2);
    CHECK_THROWS_WITH_AS(apply_config_text("seed: 3\nbogus_key: 1\n", base),
                         doctest::Contains("bogus_key (line 2)"), ConfigError);
    CHECK_THROWS_WITH_AS(apply_config_text("seed: 3\n\nris_elements: many\n", base),
                         doctest::Contains("ris_elements (line 3)"), ConfigError);
    CHECK_THROWS_AS(apply_config_text("seed: [1, 2\n", base), ConfigError);
    CHECK_THROWS_AS(apply_config_text("scenario: indoor\n", base), ConfigError);
    CHECK_THROWS_AS(parse_experiment("fig9"), ConfigError);
    CHECK(parse_experiment("fig3") == ExperimentId::Fig3);
}

TEST_CASE("out-of-range foliage is rejected by validation")
{
    const fs::path path = fs::path(RISCHAN_TEST_DATA) / "bad_foliage.yaml";
    const ValidationReport report = validate_config(path.string());
    CHECK_FALSE(report.ok);
    bool named = false;
    for (const auto &line : report.lines)
        named = named || line.find("foliage_rate") != std::string::npos;
    CHECK(named);

    RunManifest m;
    m.config_path = path.string();
    m.output_path = (scratch_dir() / "never.csv").string();
    fs::remove(m.output_path);
    std::ostringstream log, err;
    CHECK(run(m, log, err) == kExitConfig);
    CHECK_FALSE(fs::exists(m.output_path));
}

TEST_CASE("validate reports the far-field bound")
{
    const ValidationReport report = validate_config("");
    CHECK(report.ok);
    bool found = false;
    for (const auto &line : report.lines)
        found = found || line.find("N_max = 3000") != std::string::npos;
    CHECK(found);
}

TEST_CASE("missing config file exits with the config code and writes nothing")
{
    RunManifest m;
    m.config_path = (scratch_dir() / "does_not_exist.yaml").string();
    m.output_path = (scratch_dir() / "missing.csv").string();
    fs::remove(m.output_path);
    std::ostringstream log, err;
    CHECK(run(m, log, err) == kExitConfig);
    CHECK_FALSE(fs::exists(m.output_path));
    CHECK(err.str().find("error") != std::string::npos);
}

TEST_CASE("unknown experiment exits with the config code")
{
    RunManifest m;
    m.experiment = "fig7";
    std::ostringstream log, err;
    CHECK(run(m, log, err) == kExitConfig);
    CHECK(log.str().empty());
}

TEST_CASE("unwritable output exits with the I/O code")
{
    RunManifest m;
    m.experiment = "fig3";
    m.output_path = (scratch_dir() / "no_such_dir" / "out.csv").string();
    std::ostringstream log, err;
    CHECK(run(m, log, err) == kExitIo);
}

TEST_CASE("fig2 CSV carries the reference optimum")
{
    RunManifest m;
    m.trials = 10;
    const std::string csv = run_to_string(m);
    CHECK(csv.find("n_elements[count],optimal[dBm]") != std::string::npos);
    CHECK(csv.find("# n_max = 3000") != std::string::npos);
    CHECK(csv.find("# warning N = 5000") != std::string::npos);

    const auto cols = parse_csv(csv);
    const auto &n = cols.at("n_elements[count]");
    const auto &opt = cols.at("optimal[dBm]");
    REQUIRE(cols.count("random_phase_mean[dBm]") == 1);
    const auto it = std::find(n.begin(), n.end(), 1000.0);
    REQUIRE(it != n.end());
    CHECK(std::abs(opt[static_cast<std::size_t>(it - n.begin())] - -94.5) <= 0.1);
}

TEST_CASE("fig3 CSV is symmetric")
{
    RunManifest m;
    m.experiment = "fig3";
    const auto cols = parse_csv(run_to_string(m));
    const auto &p = cols.at("optimal[dBm]");
    REQUIRE(p.size() == 101);
    for (std::size_t k = 0; k < p.size(); ++k)
        CHECK(std::abs(p[k] - p[p.size() - 1 - k]) <= 1e-9);
}

TEST_CASE("reruns are byte-identical across thread counts")
{
    for (const char *experiment : {"fig2", "fig5"})
    {
        RunManifest m;
        m.experiment = experiment;
        m.trials = 20;
        m.seed = 7;
        m.threads = 1;
        const std::string serial = run_to_string(m);
        const std::string again = run_to_string(m);
        m.threads = 3;
        const std::string parallel = run_to_string(m);
        CHECK(serial == again);
        CHECK(serial == parallel);
        m.seed = 8;
        CHECK(serial != run_to_string(m));
    }
}

TEST_CASE("file overrides and manifest overrides stack in order")
{
    const fs::path path = scratch_dir() / "stack.yaml";
    write_file(path, "seed: 11\ntrials: 5\nris_elements: 64\n");
    RunManifest m;
    m.config_path = path.string();
    m.seed = 12;
    const RunConfig cfg = resolve_config(m);
    CHECK(cfg.scenario.seed == 12);
    CHECK(cfg.scenario.trials == 5);
    CHECK(cfg.scenario.ris_elements == 64);

    m.output_path = (scratch_dir() / "stack.csv").string();
    m.experiment = "fig4";
    std::ostringstream log, err;
    REQUIRE(run(m, log, err) == kExitOk);
    const std::string csv = read_file(m.output_path);
    CHECK(csv.find("# config seed = 12") != std::string::npos);
    CHECK(csv.find("direct_blocked_50db[dBm]") != std::string::npos);
    CHECK(log.str().find("wrote") != std::string::npos);
}

TEST_CASE("every key round-trips through the echo")
{
    const auto entries = config_entries(experiment_defaults(ExperimentId::Custom));
    for (const auto &[key, value] : entries)
        CHECK(std::find(config_keys().begin(), config_keys().end(), key) != config_keys().end());
    std::string text;
    for (const auto &[key, value] : entries)
        text += key + ": " + value + "\n";
    const RunConfig back = apply_config_text(text, experiment_defaults(ExperimentId::Custom));
    CHECK(config_entries(back) == entries);
}
