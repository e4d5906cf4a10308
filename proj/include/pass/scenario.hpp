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


#ifndef PASS_SCENARIO_HPP
#define PASS_SCENARIO_HPP

#include "pass/link.hpp"
#include "pass/placement.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pass
{
    // Malformed config text, unknown key or wrongly typed value
    class config_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct SweepAxis
    {
        std::string key;
        std::vector<double> values;
    };

    // Experiment description as read from a config file. All PAs share one PinchSpec.
    struct SystemScenario
    {
        WaveguideSpec<double> waveguide;
        PinchSpec<double> pinch;
        std::optional<double> coupling_length; // Defaults to pi / (2 kappa_c)
        OfdmGrid<double> grid;
        PowerBudget<double> budget;
        UserGeometry<double> user;

        Index num_pas = 8;
        double guard_gap = 0.05;
        std::optional<std::vector<double>> positions; // Explicit placement, overrides the rule

        ModelVariant variant = ModelVariant::Practical;
        bool rounded_c = false;
        std::optional<Index> cp_samples;

        // Axes used by the fig3 / fig4 presets
        std::vector<double> scan_bandwidths;
        std::vector<Index> scan_num_pas;
        std::vector<double> scan_center_frequencies;

        std::vector<SweepAxis> sweep;

        double speed_of_light() const { return rounded_c ? speed_of_light_rounded<double> : pass::speed_of_light<double>; }
        double resolved_coupling_length() const;
        PlacementRule<double> placement_rule() const;
        RVector<double> resolved_positions() const;
    };

    enum class Preset
    {
        Base,
        Fig2,
        Fig3,
        Fig4
    };

    // Compiled-in defaults; presets set rounded_c and their own centre frequencies and scan axes
    SystemScenario preset_scenario(Preset preset = Preset::Base);

    // Apply a flat JSON object of overrides. Unknown keys and type mismatches raise config_error.
    void apply_json(SystemScenario &scenario, const nlohmann::json &config);

    // Single `key=value` override; value is parsed as JSON, bare words are taken as strings
    void apply_override(SystemScenario &scenario, std::string_view assignment);

    // Set one numeric field by key; used by the sweep driver
    void set_scalar(SystemScenario &scenario, const std::string &key, double value);
    bool is_sweepable(const std::string &key);

    // Parse config text; an empty document yields the unchanged base scenario
    SystemScenario parse_scenario(std::string_view text, SystemScenario base = preset_scenario());
    SystemScenario load_scenario(const std::filesystem::path &path, SystemScenario base = preset_scenario());

    // Resolved scenario as a single JSON object (all keys, derived placement included)
    nlohmann::json to_json(const SystemScenario &scenario);

    // Build and validate the link model; throws validation_error / placement_error
    LinkScenario<double> resolve(const SystemScenario &scenario);

    std::string to_string(ModelVariant v);
    ModelVariant parse_variant(std::string_view name);
}

#endif
