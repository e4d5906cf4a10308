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


#include "pass/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace pass
{
    using nlohmann::json;

    namespace
    {
        double as_number(const std::string &key, const json &v)
        {
            if (!v.is_number())
                throw config_error("key '" + key + "': expected a number, got " + std::string(v.type_name()));
            const double x = v.get<double>();
            if (!std::isfinite(x))
                throw config_error("key '" + key + "': value must be finite");
            return x;
        }

        Index as_index(const std::string &key, const json &v)
        {
            const double x = as_number(key, v);
            if (std::floor(x) != x)
                throw config_error("key '" + key + "': expected an integer");
            return static_cast<Index>(x);
        }

        bool as_bool(const std::string &key, const json &v)
        {
            if (!v.is_boolean())
                throw config_error("key '" + key + "': expected true or false");
            return v.get<bool>();
        }

        std::vector<double> as_number_list(const std::string &key, const json &v)
        {
            if (!v.is_array())
                throw config_error("key '" + key + "': expected an array of numbers");
            std::vector<double> out;
            for (const auto &e : v)
                out.push_back(as_number(key, e));
            return out;
        }

        struct Field
        {
            std::string key;
            std::function<void(SystemScenario &, const json &)> set;
            std::function<json(const SystemScenario &)> get;
            bool sweepable = false;
        };

        template <typename Member>
        Field number_field(std::string key, Member member)
        {
            return {key,
                    [key, member](SystemScenario &s, const json &v) { member(s) = as_number(key, v); },
                    [member](const SystemScenario &s) { return json(static_cast<double>(member(s))); },
                    true};
        }

        const std::vector<Field> &fields()
        {
            static const std::vector<Field> table = [] {
                std::vector<Field> f;
                f.push_back(number_field("waveguide_width_m", [](auto &s) -> decltype(auto) { return (s.waveguide.width_a); }));
                f.push_back(number_field("waveguide_length_m", [](auto &s) -> decltype(auto) { return (s.waveguide.total_length); }));
                f.push_back(number_field("attenuation_np_per_m", [](auto &s) -> decltype(auto) { return (s.waveguide.attenuation); }));
                f.push_back(number_field("waveguide_height_m", [](auto &s) -> decltype(auto) { return (s.user.waveguide_height); }));
                f.push_back(number_field("user_x_m", [](auto &s) -> decltype(auto) { return s.user.position.x(); }));
                f.push_back(number_field("user_y_m", [](auto &s) -> decltype(auto) { return s.user.position.y(); }));
                f.push_back(number_field("bandwidth_hz", [](auto &s) -> decltype(auto) { return (s.grid.bandwidth); }));
                f.push_back(number_field("center_frequency_hz", [](auto &s) -> decltype(auto) { return (s.grid.center_frequency); }));
                f.push_back(number_field("tx_power_dbm", [](auto &s) -> decltype(auto) { return (s.budget.per_subcarrier_power_dbm); }));
                f.push_back(number_field("noise_psd_dbm_hz", [](auto &s) -> decltype(auto) { return (s.budget.noise_psd_dbm_per_hz); }));
                f.push_back(number_field("kappa_per_m", [](auto &s) -> decltype(auto) { return (s.pinch.coupling_coefficient_at_center); }));
                f.push_back(number_field("effective_index", [](auto &s) -> decltype(auto) { return (s.pinch.effective_index); }));
                f.push_back(number_field("guard_gap_m", [](auto &s) -> decltype(auto) { return (s.guard_gap); }));

                f.push_back({"num_pas",
                             [](SystemScenario &s, const json &v) { s.num_pas = as_index("num_pas", v); },
                             [](const SystemScenario &s) {
                                 return json(s.positions ? static_cast<Index>(s.positions->size()) : s.num_pas);
                             },
                             true});
                f.push_back({"num_subcarriers",
                             [](SystemScenario &s, const json &v) { s.grid.subcarrier_count = as_index("num_subcarriers", v); },
                             [](const SystemScenario &s) { return json(s.grid.subcarrier_count); }, true});
                f.push_back({"coupling_length_m",
                             [](SystemScenario &s, const json &v) {
                                 if (v.is_null())
                                     s.coupling_length.reset();
                                 else
                                     s.coupling_length = as_number("coupling_length_m", v);
                             },
                             [](const SystemScenario &s) { return json(s.resolved_coupling_length()); }, true});
                f.push_back({"cp_samples",
                             [](SystemScenario &s, const json &v) {
                                 if (v.is_null())
                                     s.cp_samples.reset();
                                 else
                                     s.cp_samples = as_index("cp_samples", v);
                             },
                             [](const SystemScenario &s) { return s.cp_samples ? json(*s.cp_samples) : json(nullptr); }, true});
                f.push_back({"pa_positions_m",
                             [](SystemScenario &s, const json &v) {
                                 if (v.is_null())
                                     s.positions.reset();
                                 else
                                     s.positions = as_number_list("pa_positions_m", v);
                             },
                             [](const SystemScenario &s) { return s.positions ? json(*s.positions) : json(nullptr); }, false});
                f.push_back({"kappa_table",
                             [](SystemScenario &s, const json &v) {
                                 if (v.is_null())
                                 {
                                     s.pinch.coupling_model = ConstantCoupling{};
                                     return;
                                 }
                                 if (!v.is_array())
                                     throw config_error("key 'kappa_table': expected an array of [frequency_hz, kappa] pairs");
                                 CouplingTable<double> t;
                                 t.frequency.resize(static_cast<Index>(v.size()));
                                 t.kappa.resize(static_cast<Index>(v.size()));
                                 Index i = 0;
                                 for (const auto &row : v)
                                 {
                                     if (!row.is_array() || row.size() != 2)
                                         throw config_error("key 'kappa_table': each entry must be [frequency_hz, kappa]");
                                     t.frequency[i] = as_number("kappa_table", row[0]);
                                     t.kappa[i] = as_number("kappa_table", row[1]);
                                     ++i;
                                 }
                                 s.pinch.coupling_model = std::move(t);
                             },
                             [](const SystemScenario &s) {
                                 const auto *t = std::get_if<CouplingTable<double>>(&s.pinch.coupling_model);
                                 if (!t)
                                     return json(nullptr);
                                 json out = json::array();
                                 for (Index i = 0; i < t->frequency.size(); ++i)
                                     out.push_back({t->frequency[i], t->kappa[i]});
                                 return out;
                             },
                             false});
                f.push_back({"variant",
                             [](SystemScenario &s, const json &v) {
                                 if (!v.is_string())
                                     throw config_error("key 'variant': expected a string");
                                 s.variant = parse_variant(v.get<std::string>());
                             },
                             [](const SystemScenario &s) { return json(to_string(s.variant)); }, false});
                f.push_back({"rounded_c",
                             [](SystemScenario &s, const json &v) { s.rounded_c = as_bool("rounded_c", v); },
                             [](const SystemScenario &s) { return json(s.rounded_c); }, false});
                f.push_back({"scan_bandwidths_hz",
                             [](SystemScenario &s, const json &v) { s.scan_bandwidths = as_number_list("scan_bandwidths_hz", v); },
                             [](const SystemScenario &s) { return json(s.scan_bandwidths); }, false});
                f.push_back({"scan_center_frequencies_hz",
                             [](SystemScenario &s, const json &v) { s.scan_center_frequencies = as_number_list("scan_center_frequencies_hz", v); },
                             [](const SystemScenario &s) { return json(s.scan_center_frequencies); }, false});
                f.push_back({"scan_num_pas",
                             [](SystemScenario &s, const json &v) {
                                 std::vector<Index> out;
                                 for (double x : as_number_list("scan_num_pas", v))
                                 {
                                     if (std::floor(x) != x)
                                         throw config_error("key 'scan_num_pas': expected integers");
                                     out.push_back(static_cast<Index>(x));
                                 }
                                 s.scan_num_pas = std::move(out);
                             },
                             [](const SystemScenario &s) { return json(s.scan_num_pas); }, false});
                f.push_back({"sweep",
                             [](SystemScenario &s, const json &v) {
                                 if (!v.is_array())
                                     throw config_error("key 'sweep': expected an array of {\"key\", \"values\"} objects");
                                 std::vector<SweepAxis> axes;
                                 for (const auto &a : v)
                                 {
                                     if (!a.is_object() || !a.contains("key") || !a.contains("values") || !a["key"].is_string())
                                         throw config_error("key 'sweep': each axis needs a string 'key' and a 'values' array");
                                     axes.push_back({a["key"].get<std::string>(), as_number_list("sweep", a["values"])});
                                 }
                                 s.sweep = std::move(axes);
                             },
                             [](const SystemScenario &s) {
                                 json out = json::array();
                                 for (const auto &a : s.sweep)
                                     out.push_back({{"key", a.key}, {"values", a.values}});
                                 return out;
                             },
                             false});
                return f;
            }();
            return table;
        }

        const Field &find_field(const std::string &key)
        {
            for (const auto &f : fields())
                if (f.key == key)
                    return f;
            throw config_error("unknown key '" + key + "'");
        }

        std::string line_column(std::string_view text, std::size_t byte)
        {
            std::size_t line = 1, col = 1;
            for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i)
            {
                if (text[i] == '\n')
                    ++line, col = 1;
                else
                    ++col;
            }
            return "line " + std::to_string(line) + ", column " + std::to_string(col);
        }
    }

    double SystemScenario::resolved_coupling_length() const
    {
        if (coupling_length)
            return *coupling_length;
        return pi<double> / (2.0 * pinch.coupling_coefficient_at_center);
    }

    PlacementRule<double> SystemScenario::placement_rule() const
    {
        return PlacementRule<double>::from_coupling_length(resolved_coupling_length(), guard_gap, num_pas);
    }

    RVector<double> SystemScenario::resolved_positions() const
    {
        if (positions)
            return Eigen::Map<const RVector<double>>(positions->data(), static_cast<Index>(positions->size()));
        return approx_locations(placement_rule(), user.x(), waveguide);
    }

    SystemScenario preset_scenario(Preset preset)
    {
        SystemScenario s;
        s.scan_bandwidths.clear();
        for (int i = 1; i <= 20; ++i)
            s.scan_bandwidths.push_back(1.0e8 * i);
        s.scan_num_pas = {4, 8, 12};
        s.scan_center_frequencies = {16e9, 18e9, 22e9, 30e9};

        switch (preset)
        {
        case Preset::Base:
            break;
        case Preset::Fig2:
            s.rounded_c = true;
            s.grid.center_frequency = 15.5e9;
            break;
        case Preset::Fig3:
            s.rounded_c = true;
            s.grid.center_frequency = 28e9;
            break;
        case Preset::Fig4:
            s.rounded_c = true;
            s.grid.center_frequency = 16e9;
            break;
        }
        return s;
    }

    void apply_json(SystemScenario &scenario, const json &config)
    {
        if (config.is_null())
            return;
        if (!config.is_object())
            throw config_error("config must be a JSON object");
        for (const auto &[key, value] : config.items())
            find_field(key).set(scenario, value);
    }

    void apply_override(SystemScenario &scenario, std::string_view assignment)
    {
        const auto eq = assignment.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw config_error("override '" + std::string(assignment) + "' is not of the form key=value");
        const std::string key(assignment.substr(0, eq));
        const std::string text(assignment.substr(eq + 1));

        json value = json::parse(text, nullptr, false);
        if (value.is_discarded())
            value = text;
        find_field(key).set(scenario, value);
    }

    bool is_sweepable(const std::string &key)
    {
        for (const auto &f : fields())
            if (f.key == key)
                return f.sweepable;
        return false;
    }

    void set_scalar(SystemScenario &scenario, const std::string &key, double value)
    {
        const auto &f = find_field(key);
        if (!f.sweepable)
            throw config_error("key '" + key + "' is not a numeric scalar field");
        f.set(scenario, json(value));
    }

    SystemScenario parse_scenario(std::string_view text, SystemScenario base)
    {
        if (std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isspace(ch); }))
            return base;

        json config;
        try
        {
            config = json::parse(text.begin(), text.end());
        }
        catch (const json::parse_error &e)
        {
            throw config_error("parse error at " + line_column(text, e.byte) + ": " + e.what());
        }
        apply_json(base, config);
        return base;
    }

    SystemScenario load_scenario(const std::filesystem::path &path, SystemScenario base)
    {
        std::ifstream in(path);
        if (!in)
            throw config_error("cannot open config file '" + path.string() + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_scenario(buf.str(), std::move(base));
    }

    json to_json(const SystemScenario &scenario)
    {
        json out = json::object();
        for (const auto &f : fields())
            out[f.key] = f.get(scenario);
        try
        {
            const RVector<double> x = scenario.resolved_positions();
            out["pa_positions_m"] = std::vector<double>(x.data(), x.data() + x.size());
        }
        catch (const std::exception &)
        {
            // Unresolvable placement is reported by resolve(); keep the raw value here
        }
        return out;
    }

    LinkScenario<double> resolve(const SystemScenario &s)
    {
        LinkScenario<double> link;
        link.waveguide = s.waveguide;
        link.grid = s.grid;
        link.budget = s.budget;
        link.user = s.user;
        link.variant = s.variant;
        link.c = s.speed_of_light();
        link.cp_samples = s.cp_samples;

        s.waveguide.validate();
        s.user.validate();
        PinchSpec<double> pa = s.pinch;
        pa.coupling_length = s.resolved_coupling_length();
        pa.validate();

        link.positions = s.resolved_positions();
        link.pinches.assign(static_cast<std::size_t>(link.positions.size()), pa);
        link.validate();
        return link;
    }

    std::string to_string(ModelVariant v)
    {
        switch (v)
        {
        case ModelVariant::Practical:
            return "practical";
        case ModelVariant::IdealPhaseMatched:
            return "ideal_phase_matched";
        case ModelVariant::FrequencyIndependentAtFmax:
            return "frequency_independent_at_fmax";
        }
        return "practical";
    }

    ModelVariant parse_variant(std::string_view name)
    {
        if (name == "practical")
            return ModelVariant::Practical;
        if (name == "ideal_phase_matched")
            return ModelVariant::IdealPhaseMatched;
        if (name == "frequency_independent_at_fmax")
            return ModelVariant::FrequencyIndependentAtFmax;
        throw config_error("unknown variant '" + std::string(name) +
                           "' (expected practical, ideal_phase_matched or frequency_independent_at_fmax)");
    }
}
