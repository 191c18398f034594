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

#include "rischan/pipeline.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rischan {

enum class ExperimentId
{
    Fig2,   // received power vs N in several radio environments
    Fig3,   // RIS position along a fixed BS-UE budget
    Fig4,   // direct link with and without blockage vs the RIS link
    Fig5,   // RMa vs UMi multipath with random RIS phases
    Custom, // every element-sweep curve
};

std::string to_string(ExperimentId id);
ExperimentId parse_experiment(const std::string &name);

// Sweep axes that are not part of the link description.
struct ExperimentSettings
{
    std::vector<std::size_t> elements;
    double split_total_m = 85.71;
    std::size_t split_steps = 101;
};

struct RunConfig
{
    ScenarioConfig scenario;
    ExperimentSettings sweep;
};

// Configuration problem tied to a key and, when known, a line of the file.
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Defaults for one experiment before any file or flag overrides.
RunConfig experiment_defaults(ExperimentId id);

// Applies a flat key/value YAML document on top of `base`. Absent keys keep
// their current value; unknown keys and malformed values throw ConfigError
// with the key name and line number. Angles are in degrees, distances in
// meters, powers in dBm, gains in dBi, frequency in GHz.
RunConfig apply_config_text(const std::string &text, RunConfig base);
RunConfig apply_config_file(const std::string &path, RunConfig base);

// Resolved values in file-key form, in a fixed order (for CSV metadata).
std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig &cfg);

// Every key accepted by apply_config_text.
const std::vector<std::string> &config_keys();

} // namespace rischan
