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

#include "rischan/linkbudget.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace rischan {

namespace {

std::string fmt(double v, const char *spec = "%.12g")
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::vector<Curve> curves_for(ExperimentId id)
{
    switch (id)
    {
    case ExperimentId::Fig2:
        return {Curve::Optimal, Curve::Shadowed, Curve::Foliage, Curve::RandomPhase};
    case ExperimentId::Fig4:
        return {Curve::Optimal, Curve::Direct, Curve::BlockedDirect};
    default:
        return {Curve::Optimal, Curve::Shadowed, Curve::Foliage, Curve::RandomPhase, Curve::Direct,
                Curve::BlockedDirect};
    }
}

} // namespace

RunConfig resolve_config(const RunManifest &manifest)
{
    const ExperimentId id = parse_experiment(manifest.experiment);
    RunConfig cfg = experiment_defaults(id);
    if (!manifest.config_path.empty())
        cfg = apply_config_file(manifest.config_path, std::move(cfg));
    if (manifest.seed)
        cfg.scenario.seed = *manifest.seed;
    if (manifest.trials)
        cfg.scenario.trials = *manifest.trials;
    if (manifest.threads)
        cfg.scenario.threads = *manifest.threads;
    cfg.scenario.validate();
    return cfg;
}

SweepResult run_experiment(ExperimentId id, const RunConfig &cfg)
{
    switch (id)
    {
    case ExperimentId::Fig3:
        return sweep_distance_split(cfg.scenario, cfg.sweep.split_total_m, cfg.sweep.split_steps);
    case ExperimentId::Fig5:
        return sweep_scenario(cfg.scenario, cfg.sweep.elements, {ScenarioKind::RMa, ScenarioKind::UMi},
                              cfg.scenario.trials);
    default:
        return sweep_elements(cfg.scenario, cfg.sweep.elements, curves_for(id));
    }
}

std::string format_csv(ExperimentId id, const RunConfig &cfg, const SweepResult &result)
{
    std::ostringstream out;
    out << "# rischan experiment = " << to_string(id) << '\n';
    out << "# seed = " << cfg.scenario.seed << '\n';
    out << "# n_max = " << far_field_max_elements(cfg.scenario.link_geometry(), cfg.scenario.wavelength()) << '\n';
    for (const auto &[key, value] : config_entries(cfg))
        out << "# config " << key << " = " << value << '\n';
    for (const auto &note : result.notes)
        out << "# note " << note << '\n';
    for (const auto &warning : result.warnings)
        out << "# warning " << warning << '\n';

    out << result.axis.name << '[' << result.axis.unit << ']';
    for (const auto &c : result.curves)
        out << ',' << c.name << '[' << c.unit << ']';
    out << '\n';

    for (std::size_t row = 0; row < result.axis.values.size(); ++row)
    {
        out << fmt(result.axis.values[row]);
        for (const auto &c : result.curves)
            out << ',' << fmt(c.values[row]);
        out << '\n';
    }
    return out.str();
}

int run(const RunManifest &manifest, std::ostream &log, std::ostream &err)
{
    ExperimentId id;
    RunConfig cfg;
    SweepResult result;
    try
    {
        id = parse_experiment(manifest.experiment);
        cfg = resolve_config(manifest);
        result = run_experiment(id, cfg);
    }
    catch (const ConfigError &e)
    {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (const std::invalid_argument &e)
    {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    const std::string csv = format_csv(id, cfg, result);
    if (manifest.output_path.empty() || manifest.output_path == "-")
    {
        log << csv;
        if (!log)
            return kExitIo;
    }
    else
    {
        std::ofstream file(manifest.output_path, std::ios::binary | std::ios::trunc);
        if (!file)
        {
            err << "error: cannot open '" << manifest.output_path << "' for writing\n";
            return kExitIo;
        }
        file << csv;
        file.flush();
        if (!file)
        {
            err << "error: failed writing '" << manifest.output_path << "'\n";
            return kExitIo;
        }
    }

    for (const auto &warning : result.warnings)
        err << "warning: " << warning << '\n';

    if (!manifest.quiet)
    {
        const auto n_max = far_field_max_elements(cfg.scenario.link_geometry(), cfg.scenario.wavelength());
        std::ostream &summary = manifest.output_path.empty() || manifest.output_path == "-" ? err : log;
        summary << "experiment " << to_string(id) << ": " << result.axis.values.size() << " rows, "
                << result.curves.size() << " columns, seed " << cfg.scenario.seed << '\n';
        summary << "N_max = " << n_max << " (d1 = " << fmt(cfg.scenario.bs_ris.separation, "%.2f")
                << " m, d2 = " << fmt(cfg.scenario.ris_ue.separation, "%.2f") << " m)\n";
        if (!manifest.output_path.empty() && manifest.output_path != "-")
            summary << "wrote " << manifest.output_path << '\n';
    }
    return kExitOk;
}

ValidationReport validate_config(const std::string &config_path)
{
    ValidationReport report;
    RunConfig cfg;
    try
    {
        cfg = experiment_defaults(ExperimentId::Custom);
        if (!config_path.empty())
            cfg = apply_config_file(config_path, std::move(cfg));
        cfg.scenario.validate();
    }
    catch (const std::exception &e)
    {
        report.lines.push_back(std::string("invalid: ") + e.what());
        return report;
    }

    const ScenarioConfig &s = cfg.scenario;
    const RisLinkGeometry geom = s.link_geometry();
    const double lambda = s.wavelength();
    const std::size_t n_max = far_field_max_elements(geom, lambda);
    report.ok = true;
    report.lines.push_back("valid");
    report.lines.push_back("wavelength = " + fmt(lambda * 1e3, "%.4g") + " mm");
    report.lines.push_back("d1 = " + fmt(geom.d1, "%.2f") + " m, d2 = " + fmt(geom.d2, "%.2f") + " m");
    report.lines.push_back("N_max = " + std::to_string(n_max));
    report.lines.push_back("rayleigh_distance(N = " + std::to_string(s.ris_elements) +
                           ") = " + fmt(rayleigh_distance(s.ris_elements, lambda), "%.4g") + " m");
    try
    {
        const Placement ue = cartesian_to_placement(
            compose_frames(placement_to_cartesian(s.bs_ris), placement_to_cartesian(s.ris_ue)));
        report.lines.push_back("derived d_bs_ue = " + fmt(ue.separation, "%.2f") + " m");
    }
    catch (const std::invalid_argument &e)
    {
        report.lines.push_back(std::string("derived d_bs_ue undefined: ") + e.what());
    }
    if (s.ris_elements > n_max)
        report.lines.push_back("warning: ris_elements = " + std::to_string(s.ris_elements) +
                               " exceeds N_max; far-field results are optimistic");
    for (std::size_t n : cfg.sweep.elements)
        if (n > n_max)
        {
            report.lines.push_back("warning: swept N up to " +
                                   std::to_string(*std::max_element(cfg.sweep.elements.begin(),
                                                                    cfg.sweep.elements.end())) +
                                   " exceeds N_max");
            break;
        }
    return report;
}

} // namespace rischan
