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


#include "pass/experiments.hpp"
#include "pass/phase_analysis.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pass
{
    std::string format_number(double value)
    {
        if (std::isnan(value))
            return "";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", value);
        return buf;
    }

    void write_csv(std::ostream &out, const CsvTable &table)
    {
        out << "# " << table.provenance << '\n';
        for (std::size_t i = 0; i < table.columns.size(); ++i)
            out << (i ? "," : "") << table.columns[i];
        out << '\n';
        for (const auto &row : table.rows)
        {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << row[i];
            out << '\n';
        }
    }

    std::string to_csv(const CsvTable &table)
    {
        std::ostringstream out;
        write_csv(out, table);
        return out.str();
    }

    namespace
    {
        std::string provenance(const SystemScenario &s, const char *experiment)
        {
            auto j = to_json(s);
            j["experiment"] = experiment;
            return j.dump();
        }

        std::string fmt_index(Index v) { return std::to_string(v); }

        RVector<double> rates(LinkScenario<double> link, ModelVariant v)
        {
            link.variant = v;
            return rates_from_snr<double>(snr(link, channel_gains(link)));
        }
    }

    CsvTable run_fig2(const SystemScenario &scenario)
    {
        const auto link = resolve(scenario);
        const auto practical = rates(link, ModelVariant::Practical);
        const auto ideal = rates(link, ModelVariant::IdealPhaseMatched);
        const auto flat = rates(link, ModelVariant::FrequencyIndependentAtFmax);
        const double f0 = cutoff_frequency(link.waveguide, link.c);

        CsvTable t;
        t.provenance = provenance(scenario, "fig2");
        t.columns = {"subcarrier", "frequency_hz", "propagating", "rate_practical",
                     "rate_ideal_phase_matched", "rate_freq_independent_fmax"};
        for (Index p = 0; p < link.grid.subcarrier_count; ++p)
        {
            const double f = link.grid.frequency(p);
            t.rows.push_back({fmt_index(p + 1), format_number(f), f > f0 ? "1" : "0", format_number(practical[p]),
                              format_number(ideal[p]), format_number(flat[p])});
        }
        return t;
    }

    CsvTable run_fig3(const SystemScenario &scenario)
    {
        if (scenario.positions)
            throw config_error("fig3 scans the PA count and needs rule-based placement; remove pa_positions_m");

        CsvTable t;
        t.provenance = provenance(scenario, "fig3");
        t.columns = {"num_pas", "bandwidth_hz", "max_variation_exact_rad", "max_variation_linearized_rad"};
        for (Index n : scenario.scan_num_pas)
            for (double b : scenario.scan_bandwidths)
            {
                SystemScenario s = scenario;
                s.num_pas = n;
                s.grid.bandwidth = b;
                const auto v = max_adjacent_variation(resolve(s));
                t.rows.push_back({fmt_index(n), format_number(b), format_number(v.exact), format_number(v.linearized)});
            }
        return t;
    }

    CsvTable run_fig4(const SystemScenario &scenario)
    {
        CsvTable t;
        t.provenance = provenance(scenario, "fig4");
        t.columns = {"center_frequency_hz", "bandwidth_hz", "delay_spread_guide_s", "delay_spread_freespace_s",
                     "delay_spread_total_s", "overhead_percent", "cp_samples", "flag"};
        for (double fc : scenario.scan_center_frequencies)
            for (double b : scenario.scan_bandwidths)
            {
                SystemScenario s = scenario;
                s.grid.center_frequency = fc;
                s.grid.bandwidth = b;
                const auto link = resolve(s);
                try
                {
                    const auto spread = delay_spread(link);
                    const auto cp = cp_requirement(spread, link.grid);
                    t.rows.push_back({format_number(fc), format_number(b), format_number(spread.guide),
                                      format_number(spread.freespace), format_number(spread.total),
                                      format_number(cp.overhead_percent), fmt_index(cp.samples),
                                      spread.partial_evanescent ? "partial_evanescent" : "ok"});
                }
                catch (const no_propagating_error &)
                {
                    t.rows.push_back({format_number(fc), format_number(b), "", "", "", "", "", "no_propagating"});
                }
            }
        return t;
    }

    CsvTable run_sweep(const SystemScenario &scenario)
    {
        const auto &axes = scenario.sweep;
        if (axes.size() > 2)
            throw config_error("sweep supports at most two axes");
        for (const auto &a : axes)
        {
            if (!is_sweepable(a.key))
                throw config_error("unknown sweep field '" + a.key + "'");
            if (a.values.empty())
                throw config_error("sweep axis '" + a.key + "' has no values");
        }

        CsvTable t;
        t.provenance = provenance(scenario, "sweep");
        for (const auto &a : axes)
            t.columns.push_back(a.key);
        const std::vector<std::string> summary = {
            "sum_rate", "total_rate", "min_rate", "max_rate", "delay_spread_guide_s", "delay_spread_freespace_s",
            "delay_spread_total_s", "overhead_percent", "cp_samples", "max_variation_exact_rad",
            "max_variation_linearized_rad", "error"};
        t.columns.insert(t.columns.end(), summary.begin(), summary.end());

        // Points in row-major order of the axes; a missing axis contributes a single dummy value
        const std::size_t n0 = axes.size() > 0 ? axes[0].values.size() : 1;
        const std::size_t n1 = axes.size() > 1 ? axes[1].values.size() : 1;
        for (std::size_t i = 0; i < n0; ++i)
            for (std::size_t j = 0; j < n1; ++j)
            {
                SystemScenario s = scenario;
                std::vector<std::string> row;
                if (axes.size() > 0)
                {
                    set_scalar(s, axes[0].key, axes[0].values[i]);
                    row.push_back(format_number(axes[0].values[i]));
                }
                if (axes.size() > 1)
                {
                    set_scalar(s, axes[1].key, axes[1].values[j]);
                    row.push_back(format_number(axes[1].values[j]));
                }

                try
                {
                    const auto link = resolve(s);
                    const auto r = evaluate(link);
                    std::string var_exact, var_lin;
                    if (link.num_pas() >= 2 && link.grid.lowest() > cutoff_frequency(link.waveguide, link.c))
                    {
                        const auto v = max_adjacent_variation(link);
                        var_exact = format_number(v.exact);
                        var_lin = format_number(v.linearized);
                    }
                    for (const auto &cell :
                         {format_number(r.sum_rate), format_number(r.total_rate), format_number(r.rate.minCoeff()),
                          format_number(r.rate.maxCoeff()), format_number(r.spread.guide),
                          format_number(r.spread.freespace), format_number(r.spread.total),
                          format_number(r.overhead_percent), fmt_index(r.cp_samples), var_exact, var_lin,
                          std::string()})
                        row.push_back(cell);
                }
                catch (const std::exception &e)
                {
                    std::string msg = e.what();
                    for (auto &ch : msg)
                        if (ch == ',' || ch == '\n')
                            ch = ';';
                    row.resize(axes.size() + summary.size() - 1);
                    row.push_back(msg);
                }
                t.rows.push_back(std::move(row));
            }
        return t;
    }
}
