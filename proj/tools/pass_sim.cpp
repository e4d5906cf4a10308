// SPDX-License-Identifier: Apache-2.0
//
// pass-ofdm: frequency-selective link simulator for pinching-antenna systems
// Copyright (C) 2026 The pass-ofdm authors
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


// Command-line front end: fig2 | fig3 | fig4 | sweep | validate

#include "pass/experiments.hpp"
#include "pass/phase_analysis.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace
{
    constexpr int exit_config = 2;
    constexpr int exit_evaluation = 3;

    struct Options
    {
        std::string config;
        std::string out;
        std::vector<std::string> overrides;
        std::vector<std::string> axes;
    };

    pass::SystemScenario build(const Options &opt, pass::Preset preset)
    {
        auto s = pass::preset_scenario(preset);
        if (!opt.config.empty())
            s = pass::load_scenario(opt.config, std::move(s));
        for (const auto &o : opt.overrides)
            pass::apply_override(s, o);
        return s;
    }

    // --axis key=v1,v2,...
    pass::SweepAxis parse_axis(const std::string &text)
    {
        const auto eq = text.find('=');
        if (eq == std::string::npos || eq == 0)
            throw pass::config_error("axis '" + text + "' is not of the form key=v1,v2,...");
        pass::SweepAxis axis{text.substr(0, eq), {}};
        std::stringstream ss(text.substr(eq + 1));
        std::string item;
        while (std::getline(ss, item, ','))
        {
            try
            {
                std::size_t used = 0;
                axis.values.push_back(std::stod(item, &used));
                if (used != item.size())
                    throw std::invalid_argument(item);
            }
            catch (const std::exception &)
            {
                throw pass::config_error("axis '" + axis.key + "': '" + item + "' is not a number");
            }
        }
        return axis;
    }

    nlohmann::json diagnostics(const pass::SystemScenario &s, const pass::LinkScenario<double> &link)
    {
        const double f0 = pass::cutoff_frequency(link.waveguide, link.c);
        const double fc = link.grid.center_frequency;
        const auto rule = s.placement_rule();
        const double half_wavelength = link.c / fc / 2.0;

        nlohmann::json d;
        d["cutoff_frequency_hz"] = f0;
        d["lowest_subcarrier_hz"] = link.grid.lowest();
        d["highest_subcarrier_hz"] = link.grid.highest();
        d["propagating_subcarriers"] = (link.grid.frequencies().array() > f0).count();
        d["min_spacing_m"] = rule.min_spacing;
        d["half_wavelength_at_center_m"] = half_wavelength;
        d["spacing_exceeds_half_wavelength"] = rule.min_spacing > half_wavelength;
        d["unimodal_placement"] = pass::unimodality_check(rule, link.user);
        if (fc > f0)
        {
            bool flipped = false;
            for (pass::Index n = 0; n < link.num_pas(); ++n)
                flipped = flipped || pass::accumulated_phase(link, n, fc).coupling_sign_flipped;
            d["coupling_sign_flipped_at_center"] = flipped;
        }
        return d;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Frequency-selective OFDM link simulator for pinching-antenna systems"};
    app.require_subcommand(1);

    Options opt;
    auto common = [&opt](CLI::App *cmd) {
        cmd->add_option("--config", opt.config, "JSON scenario file")->check(CLI::ExistingFile);
        cmd->add_option("--out", opt.out, "Output file (default: standard output)");
        cmd->add_option("--set", opt.overrides, "Override one scenario key (key=value), repeatable");
    };

    auto *fig2 = app.add_subcommand("fig2", "Per-subcarrier rate of the three model variants");
    auto *fig3 = app.add_subcommand("fig3", "Adjacent-PA phase variation vs bandwidth and PA count");
    auto *fig4 = app.add_subcommand("fig4", "Delay spread and minimum CP overhead vs bandwidth");
    auto *sweep = app.add_subcommand("sweep", "Cartesian sweep over up to two scenario fields");
    auto *validate = app.add_subcommand("validate", "Resolve and validate a scenario, print it as JSON");
    for (auto *cmd : {fig2, fig3, fig4, sweep, validate})
        common(cmd);
    sweep->add_option("--axis", opt.axes, "Sweep axis key=v1,v2,... (at most two)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_config;
    }

    pass::SystemScenario scenario;
    pass::LinkScenario<double> link;
    try
    {
        pass::Preset preset = pass::Preset::Base;
        if (fig2->parsed())
            preset = pass::Preset::Fig2;
        else if (fig3->parsed())
            preset = pass::Preset::Fig3;
        else if (fig4->parsed())
            preset = pass::Preset::Fig4;
        scenario = build(opt, preset);
        for (const auto &a : opt.axes)
            scenario.sweep.push_back(parse_axis(a));
        link = pass::resolve(scenario);
    }
    catch (const pass::config_error &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    }
    catch (const pass::validation_error &e)
    {
        std::cerr << "validation error: " << e.what() << '\n';
        return exit_config;
    }

    std::string text;
    try
    {
        if (validate->parsed())
        {
            nlohmann::json j;
            j["scenario"] = pass::to_json(scenario);
            j["diagnostics"] = diagnostics(scenario, link);
            text = j.dump(2) + "\n";
        }
        else if (fig2->parsed())
            text = pass::to_csv(pass::run_fig2(scenario));
        else if (fig3->parsed())
            text = pass::to_csv(pass::run_fig3(scenario));
        else if (fig4->parsed())
            text = pass::to_csv(pass::run_fig4(scenario));
        else
            text = pass::to_csv(pass::run_sweep(scenario));
    }
    catch (const pass::config_error &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    }
    catch (const pass::validation_error &e)
    {
        std::cerr << "validation error: " << e.what() << '\n';
        return exit_config;
    }
    catch (const std::exception &e)
    {
        std::cerr << "evaluation error: " << e.what() << '\n';
        return exit_evaluation;
    }

    if (opt.out.empty())
        std::cout << text;
    else
    {
        std::ofstream out(opt.out, std::ios::binary);
        if (!out)
        {
            std::cerr << "cannot write '" << opt.out << "'\n";
            return exit_evaluation;
        }
        out << text;
    }
    return 0;
}
