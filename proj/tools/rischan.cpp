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

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv)
{
    CLI::App app{"Channel simulator and link-budget engine for RIS-assisted mmWave links"};
    app.require_subcommand(1);

    rischan::RunManifest manifest;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t threads = 0;

    auto *run = app.add_subcommand("run", "Run an experiment and write CSV");
    run->add_option("--config", manifest.config_path, "Flat key: value YAML config");
    run->add_option("--experiment", manifest.experiment, "fig2, fig3, fig4, fig5 or custom")->capture_default_str();
    run->add_option("--out", manifest.output_path, "Output CSV path ('-' for stdout)");
    auto *seed_opt = run->add_option("--seed", seed, "Master RNG seed");
    auto *trials_opt = run->add_option("--trials", trials, "Monte Carlo trials per sweep point");
    auto *threads_opt = run->add_option("--threads", threads, "Worker threads (0 = all cores)");
    run->add_flag("--quiet", manifest.quiet, "Suppress the run summary");

    std::string validate_path;
    auto *validate = app.add_subcommand("validate", "Check a config file and report the far-field bound");
    validate->add_option("--config", validate_path, "Flat key: value YAML config");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : rischan::kExitConfig;
    }

    if (*run)
    {
        if (*seed_opt)
            manifest.seed = seed;
        if (*trials_opt)
            manifest.trials = trials;
        if (*threads_opt)
            manifest.threads = threads;
        return rischan::run(manifest, std::cout, std::cerr);
    }

    const auto report = rischan::validate_config(validate_path);
    for (const auto &line : report.lines)
        (report.ok ? std::cout : std::cerr) << line << '\n';
    return report.ok ? rischan::kExitOk : rischan::kExitConfig;
}
