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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "pass/experiments.hpp"
#include "pass/pass.hpp"
#include "../support/coupled_mode_ode.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace
{
    using clock_type = std::chrono::steady_clock;

    int failures = 0;

    void report(bool ok, const std::string &name, const std::string &detail)
    {
        std::printf("%s  %-32s %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
        failures += !ok;
    }

    double seconds_since(clock_type::time_point t0)
    {
        return std::chrono::duration<double>(clock_type::now() - t0).count();
    }

    std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0)
    {
        char buf[160];
        std::snprintf(buf, sizeof(buf), f, a, b, c);
        return buf;
    }

    struct Triple
    {
        double kappa, dbeta, L;
    };

    std::vector<Triple> random_triples(std::size_t n)
    {
        std::mt19937_64 rng(20260415);
        std::uniform_real_distribution<double> k(1.0, 50.0), db(-500.0, 500.0), len(0.01, 0.5);
        std::vector<Triple> out(n);
        for (auto &t : out)
            t = {k(rng), db(rng), len(rng)};
        return out;
    }

    pass::PinchSpec<double> pinch(double kappa, double L)
    {
        pass::PinchSpec<double> p;
        p.coupling_coefficient_at_center = kappa;
        p.coupling_length = L;
        return p;
    }

    void closed_form_vs_ode(const std::vector<Triple> &triples)
    {
        const auto t0 = clock_type::now();
        double worst = 0.0;
        for (const auto &t : triples)
        {
            const auto cf = pass::local_factors(pinch(t.kappa, t.L), t.dbeta, 0.0);
            const auto ode = pass::test::ode_oracle(t.kappa, t.dbeta, t.L);
            worst = std::max({worst, std::abs(cf.residual_wg_factor - ode.A), std::abs(cf.local_pa_factor - ode.B)});
        }
        const double dt = seconds_since(t0);
        report(worst < 1e-6 && dt < 10.0, "coupled-mode closed form vs ODE",
               fmt("max err %.3g (< 1e-6), %.2f s (< 10 s), 1000 triples", worst, dt));
    }

    void energy_conservation(const std::vector<Triple> &triples)
    {
        double worst = 0.0;
        for (const auto &t : triples)
        {
            const auto cf = pass::local_factors(pinch(t.kappa, t.L), t.dbeta, 0.0);
            worst = std::max(worst, std::abs(std::norm(cf.residual_wg_factor) + std::norm(cf.local_pa_factor) - 1.0));
        }

        // Eight PAs drawn from the same set, fed through the cascade at several frequencies
        double worst_cascade = 0.0;
        const pass::WaveguideSpec<double> wg;
        for (std::size_t start = 0; start + 8 <= triples.size(); start += 8)
        {
            std::vector<pass::PinchSpec<double>> array;
            for (std::size_t i = start; i < start + 8; ++i)
                array.push_back(pinch(triples[i].kappa, triples[i].L));
            for (double f : {15.2e9, 15.5e9, 20e9, 28e9})
            {
                const auto cas = pass::cascade<double>(array, wg, f);
                double total = std::norm(cas.remainder);
                for (const auto &st : cas.stages)
                    total += std::norm(st.effective_factor);
                worst_cascade = std::max(worst_cascade, std::abs(total - 1.0));
            }
        }
        report(worst < 1e-12 && worst_cascade < 1e-12, "energy conservation",
               fmt("section %.3g, cascade N=8 %.3g (< 1e-12)", worst, worst_cascade));
    }

    void cutoff_behaviour()
    {
        const auto scenario = pass::preset_scenario(pass::Preset::Fig2);
        const auto t0 = clock_type::now();
        const auto table = pass::run_fig2(scenario);
        const double dt = seconds_since(t0);

        const double f0 = 15e9;
        double worst_evanescent = 0.0, flat_dev = 0.0;
        std::size_t propagating = 0;
        const double flat_ref = std::stod(table.rows.front()[5]);
        for (const auto &row : table.rows)
        {
            const double f = std::stod(row[1]), rate = std::stod(row[3]);
            if (f < f0)
                worst_evanescent = std::max(worst_evanescent, rate);
            else
                ++propagating;
            flat_dev = std::max(flat_dev, std::abs(std::stod(row[5]) - flat_ref) / flat_ref);
        }
        report(worst_evanescent < 1e-6 && propagating > 0 && flat_dev < 1e-12 && dt < 1.0, "cutoff behaviour",
               fmt("max evanescent rate %.3g, %.0f propagating, flat-model dev %.3g", worst_evanescent,
                   double(propagating), flat_dev) +
                   fmt(", %.3f s", dt));
    }

    void frequency_selectivity()
    {
        const auto table = pass::run_fig2(pass::preset_scenario(pass::Preset::Fig2));
        std::vector<double> prop;
        double sum_practical = 0.0, sum_ideal = 0.0;
        for (const auto &row : table.rows)
        {
            sum_practical += std::stod(row[3]);
            sum_ideal += std::stod(row[4]);
            if (row[2] == "1")
                prop.push_back(std::stod(row[3]));
        }
        double mean = 0.0, var = 0.0;
        for (double r : prop)
            mean += r / double(prop.size());
        for (double r : prop)
            var += (r - mean) * (r - mean) / double(prop.size() - 1);
        const double sd = std::sqrt(var);
        report(sd > 0.1 && sum_ideal > sum_practical, "frequency selectivity",
               fmt("practical std %.4g bits (> 0.1), ideal sum %.6g > practical sum %.6g", sd, sum_ideal,
                   sum_practical));
    }

    void lemma_convergence()
    {
        auto base = pass::preset_scenario(pass::Preset::Fig3);
        double lo = 1e300, hi = -1e300;
        int pairs = 0;
        for (pass::Index N : base.scan_num_pas)
        {
            auto s = base;
            s.num_pas = N;
            const auto link = pass::resolve(s);
            const double fc = link.grid.center_frequency;
            for (double delta : {1e9, -1e9, 0.5e9, -0.5e9})
                for (pass::Index n = 1; n < link.num_pas(); ++n)
                {
                    auto err = [&](double d) {
                        return pass::adjacent_phase_terms(link, n, fc + d).lemma_form -
                               pass::adjacent_phase_difference_linearized(link, n, fc + d);
                    };
                    const double e1 = err(delta);
                    if (std::abs(e1) < 1e-9)
                        continue;
                    const double ratio = err(delta / 2) / e1;
                    lo = std::min(lo, ratio);
                    hi = std::max(hi, ratio);
                    ++pairs;
                }
        }

        // Linearized variation over the scanned bandwidths, relative to its per-Hz value at the first one
        const auto table = pass::run_fig3(base);
        double prop_dev = 0.0;
        for (std::size_t i = 0; i < table.rows.size(); ++i)
        {
            const auto &ref = table.rows[i - i % base.scan_bandwidths.size()];
            const double k_ref = std::stod(ref[3]) / std::stod(ref[1]);
            const double k = std::stod(table.rows[i][3]) / std::stod(table.rows[i][1]);
            prop_dev = std::max(prop_dev, std::abs(k - k_ref) / k_ref);
        }
        report(pairs > 0 && lo >= 0.2 && hi <= 0.3 && prop_dev < 1e-12, "linearization convergence",
               fmt("error ratio in [%.4f, %.4f] over ", lo, hi) + std::to_string(pairs) +
                   fmt(" pairs, linear-in-B dev %.3g", prop_dev));
    }

    void fig3_trends()
    {
        const auto s = pass::preset_scenario(pass::Preset::Fig3);
        const auto table = pass::run_fig3(s);
        const std::size_t nb = s.scan_bandwidths.size();
        bool in_n = true, in_b = true;
        for (std::size_t i = 0; i < table.rows.size(); ++i)
        {
            const double v = std::stod(table.rows[i][2]);
            if (i >= nb)
                in_n = in_n && v > std::stod(table.rows[i - nb][2]);
            if (i % nb)
                in_b = in_b && v > std::stod(table.rows[i - 1][2]);
        }
        report(in_n && in_b, "phase variation trends",
               std::string("increasing in N: ") + (in_n ? "yes" : "no") + ", increasing in B: " + (in_b ? "yes" : "no"));
    }

    void fig4_trends()
    {
        const auto s = pass::preset_scenario(pass::Preset::Fig4);
        const auto table = pass::run_fig4(s);
        const std::size_t nb = s.scan_bandwidths.size();
        auto overhead = [&](std::size_t fi, std::size_t bi) { return std::stod(table.rows[fi * nb + bi][5]); };

        bool in_b = true, low_vs_high = true;
        std::size_t i16 = 0, i30 = 0;
        for (std::size_t fi = 0; fi < s.scan_center_frequencies.size(); ++fi)
        {
            if (s.scan_center_frequencies[fi] == 16e9)
                i16 = fi;
            if (s.scan_center_frequencies[fi] == 30e9)
                i30 = fi;
            for (std::size_t bi = 1; bi < nb; ++bi)
                in_b = in_b && overhead(fi, bi) > overhead(fi, bi - 1);
        }
        for (std::size_t bi = 0; bi < nb; ++bi)
            low_vs_high = low_vs_high && overhead(i16, bi) > overhead(i30, bi);

        const pass::WaveguideSpec<double> wg;
        const double spread = pass::waveguide_delay_spread(wg, 15.5e9, 16.5e9, 1.4496, pass::speed_of_light_rounded<double>);
        const double rel = std::abs(spread - 7.58e-9) / 7.58e-9;
        report(in_b && low_vs_high && rel < 0.005, "delay spread and CP overhead",
               std::string("increasing in B: ") + (in_b ? "yes" : "no") + ", 16 GHz > 30 GHz: " +
                   (low_vs_high ? "yes" : "no") + fmt(", guide spread %.5g ns (rel dev %.3g)", spread * 1e9, rel));
    }

    void placement_optimality()
    {
        const auto s = pass::preset_scenario();
        const auto rule = s.placement_rule();
        const bool unimodal = pass::unimodality_check(rule, s.user);
        const auto best = pass::approx_locations(rule, s.user.x(), s.waveguide);
        const double g_best = pass::geometric_path_gain<double>(best, s.user);

        double excess = -1e300;
        const double step = rule.min_spacing / 1000.0;
        const double lo = -best.minCoeff(), hi = s.waveguide.total_length - best.maxCoeff();
        for (long k = long(std::ceil(lo / step)); k <= long(std::floor(hi / step)); ++k)
        {
            const Eigen::VectorXd trial = (best.array() + double(k) * step).matrix();
            excess = std::max(excess, pass::geometric_path_gain<double>(trial, s.user) - g_best);
        }
        report(unimodal && excess <= 1e-12, "placement optimality",
               std::string("unimodal: ") + (unimodal ? "yes" : "no") +
                   fmt(", best shifted gain minus centred %.3g (<= 1e-12)", excess));
    }

    void determinism()
    {
        using runner = std::function<pass::CsvTable(const pass::SystemScenario &)>;
        const std::vector<std::pair<pass::Preset, runner>> runs = {
            {pass::Preset::Fig2, pass::run_fig2},
            {pass::Preset::Fig3, pass::run_fig3},
            {pass::Preset::Fig4, pass::run_fig4},
            {pass::Preset::Base, pass::run_sweep},
        };
        bool same = true;
        for (const auto &[preset, run] : runs)
        {
            const auto s = pass::preset_scenario(preset);
            same = same && pass::to_csv(run(s)) == pass::to_csv(run(s));
        }
        report(same, "deterministic output", same ? "all presets byte-identical" : "outputs differ between runs");
    }
}

int main()
{
    try
    {
        const auto triples = random_triples(1000);
        closed_form_vs_ode(triples);
        energy_conservation(triples);
        cutoff_behaviour();
        frequency_selectivity();
        lemma_convergence();
        fig3_trends();
        fig4_trends();
        placement_optimality();
        determinism();
    }
    catch (const std::exception &e)
    {
        std::printf("FAIL  unexpected exception: %s\n", e.what());
        return 1;
    }
    std::printf("%d criteria failed\n", failures);
    return failures ? 1 : 0;
}
