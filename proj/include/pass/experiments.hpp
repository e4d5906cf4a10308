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


#ifndef PASS_EXPERIMENTS_HPP
#define PASS_EXPERIMENTS_HPP

#include "pass/scenario.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace pass
{
    // Table with a provenance comment; written as `# <json>` then the header row then data rows
    struct CsvTable
    {
        std::string provenance;
        std::vector<std::string> columns;
        std::vector<std::vector<std::string>> rows;
    };

    // 17 significant digits; NaN becomes an empty cell
    std::string format_number(double value);

    void write_csv(std::ostream &out, const CsvTable &table);
    std::string to_csv(const CsvTable &table);

    // Per-subcarrier rates of the three model variants:
    // subcarrier,frequency_hz,propagating,rate_practical,rate_ideal_phase_matched,rate_freq_independent_fmax
    CsvTable run_fig2(const SystemScenario &scenario);

    // Adjacent-PA phase swing over scan_num_pas x scan_bandwidths_hz:
    // num_pas,bandwidth_hz,max_variation_exact_rad,max_variation_linearized_rad
    CsvTable run_fig3(const SystemScenario &scenario);

    // Delay spread and CP overhead over scan_center_frequencies_hz x scan_bandwidths_hz:
    // center_frequency_hz,bandwidth_hz,delay_spread_guide_s,delay_spread_freespace_s,
    // delay_spread_total_s,overhead_percent,cp_samples,flag
    CsvTable run_fig4(const SystemScenario &scenario);

    // Cartesian sweep over up to two numeric fields; one summary row per point
    CsvTable run_sweep(const SystemScenario &scenario);
}

#endif
