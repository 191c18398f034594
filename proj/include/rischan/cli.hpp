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

#include "rischan/config.hpp"
#include "rischan/pipeline.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rischan {

// Process exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

struct RunManifest
{
    std::string config_path; // empty: defaults only
    std::string experiment = "fig2";
    std::string output_path; // empty or "-": stdout
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> threads;
    bool quiet = false;
};

// Loads defaults, the experiment preset, the config file and the manifest
// overrides, in that order. Throws ConfigError or std::invalid_argument.
RunConfig resolve_config(const RunManifest &manifest);

// Runs the selected sweep for an already resolved configuration.
SweepResult run_experiment(ExperimentId id, const RunConfig &cfg);

// CSV with '#' metadata lines, a header row "name[unit],..." and one row per
// sweep point. Output depends only on its inputs.
std::string format_csv(ExperimentId id, const RunConfig &cfg, const SweepResult &result);

// Returns the process exit code. The summary goes to `log`, errors and
// far-field warnings to `err`.
int run(const RunManifest &manifest, std::ostream &log, std::ostream &err);

struct ValidationReport
{
    bool ok = false;
    std::vector<std::string> lines;
};

// Checks a config file without writing anything. An empty path validates
// the defaults.
ValidationReport validate_config(const std::string &config_path);

} // namespace rischan
