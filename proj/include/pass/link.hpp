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


#ifndef PASS_LINK_HPP
#define PASS_LINK_HPP

#include "pass/coupling.hpp"
#include "pass/radiation.hpp"
#include "pass/waveguide.hpp"

#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace pass
{
    // ================================================================================================
    // Scenario description
    // ================================================================================================

    // Subcarrier p (0-based) sits at f_c - B/2 + (p + 1/2) B/P
    template <typename T = double>
    struct OfdmGrid
    {
        Index subcarrier_count = 64;      // P
        T bandwidth = T(2e9);             // B [Hz]
        T center_frequency = T(15.5e9);   // f_c [Hz]

        T spacing() const { return bandwidth / T(subcarrier_count); }

        T frequency(Index p) const
        {
            return center_frequency - bandwidth / T(2) + (T(p) + T(0.5)) * spacing();
        }

        RVector<T> frequencies() const
        {
            return RVector<T>::NullaryExpr(subcarrier_count, [this](Index p) { return frequency(p); });
        }

        T lowest() const { return frequency(0); }
        T highest() const { return frequency(subcarrier_count - 1); }

        // Useful OFDM symbol duration P / B
        T symbol_duration() const { return T(subcarrier_count) / bandwidth; }

        void validate() const
        {
            if (subcarrier_count < 1)
                throw validation_error("num_subcarriers", "at least one subcarrier is required");
            if (!(bandwidth > T(0)) || !std::isfinite(bandwidth))
                throw validation_error("bandwidth_hz", "bandwidth must be positive");
            if (!std::isfinite(center_frequency) || !(lowest() > T(0)))
                throw validation_error("center_frequency_hz", "all subcarrier frequencies must be positive");
        }
    };

    // Uniform per-subcarrier transmit power and noise PSD, both in logarithmic units
    template <typename T = double>
    struct PowerBudget
    {
        T per_subcarrier_power_dbm = T(30);
        T noise_psd_dbm_per_hz = T(-174);

        T power_watts() const { return std::pow(T(10), (per_subcarrier_power_dbm - T(30)) / T(10)); }

        // sigma^2 over one subcarrier bandwidth B/P
        T noise_power_watts(const OfdmGrid<T> &grid) const
        {
            return std::pow(T(10), (noise_psd_dbm_per_hz - T(30)) / T(10)) * grid.spacing();
        }

        void validate() const
        {
            if (!std::isfinite(per_subcarrier_power_dbm))
                throw validation_error("tx_power_dbm", "transmit power must be finite");
            if (!std::isfinite(noise_psd_dbm_per_hz))
                throw validation_error("noise_psd_dbm_hz", "noise PSD must be finite");
        }
    };

    enum class ModelVariant
    {
        Practical,                 // Frequency-dependent mismatch Delta beta(f_p)
        IdealPhaseMatched,         // Delta beta forced to zero, everything else frequency dependent
        FrequencyIndependentAtFmax // Every frequency-dependent factor frozen at the highest subcarrier
    };

    // Fully resolved link: one PinchSpec per PA, explicit positions in feed order
    template <typename T = double>
    struct LinkScenario
    {
        WaveguideSpec<T> waveguide;
        std::vector<PinchSpec<T>> pinches;
        RVector<T> positions; // x_n along the guide [m], strictly increasing
        OfdmGrid<T> grid;
        PowerBudget<T> budget;
        UserGeometry<T> user;
        ModelVariant variant = ModelVariant::Practical;
        T c = speed_of_light<T>;
        std::optional<Index> cp_samples; // Fixed CP length; computed from the delay spread when empty

        Index num_pas() const { return positions.size(); }

        void validate() const
        {
            waveguide.validate();
            grid.validate();
            budget.validate();
            user.validate();
            if (positions.size() < 1)
                throw validation_error("num_pas", "at least one PA is required");
            if (static_cast<Index>(pinches.size()) != positions.size())
                throw validation_error("pinches", "one PinchSpec per PA position is required");
            for (const auto &p : pinches)
                p.validate();
            if (!positions.allFinite() || positions.minCoeff() < T(0) || positions.maxCoeff() > waveguide.total_length)
                throw placement_error("PA positions must lie within [0, L_WG]");
            for (Index n = 1; n < positions.size(); ++n)
                if (!(positions[n] > positions[n - 1]))
                    throw placement_error("PA positions must be strictly increasing");
            if (cp_samples && *cp_samples < 0)
                throw validation_error("cp_samples", "CP length must be non-negative");
            if (!(c > T(0)))
                throw validation_error("speed_of_light", "must be positive");
        }

        std::span<const PinchSpec<T>> pinch_span() const { return {pinches.data(), pinches.size()}; }
    };

    // ================================================================================================
    // Per-subcarrier channel
    // ================================================================================================

    // Frequency at which the model evaluates subcarrier p under the scenario's variant
    template <typename T>
    T evaluation_frequency(const LinkScenario<T> &s, Index p)
    {
        if (s.variant == ModelVariant::FrequencyIndependentAtFmax)
            return s.grid.highest();
        return s.grid.frequency(p);
    }

    // h_eff for every PA at subcarrier p: T(f, x_n) * alpha''_n(f) * h_n(f).
    // Below cutoff the evanescent transfer function drives the gain to (numerically) zero.
    template <typename T>
    CVector<T> effective_gains(const LinkScenario<T> &s, Index p)
    {
        const T f = evaluation_frequency(s, p);
        const bool matched = s.variant == ModelVariant::IdealPhaseMatched;
        const auto cas = cascade(s.pinch_span(), s.waveguide, f, s.c, matched);

        CVector<T> h(s.num_pas());
        for (Index n = 0; n < h.size(); ++n)
        {
            const T x = s.positions[n];
            h[n] = transfer_function(s.waveguide, f, x, s.c) *
                   cas.stages[static_cast<std::size_t>(n)].effective_factor *
                   freespace_gain(s.user, x, f, s.c);
        }
        return h;
    }

    template <typename T>
    Complex<T> effective_gain(const LinkScenario<T> &s, Index n, Index p)
    {
        return effective_gains(s, p)[n];
    }

    // Coherent sum over the array
    template <typename T>
    Complex<T> total_gain(const LinkScenario<T> &s, Index p)
    {
        return effective_gains(s, p).sum();
    }

    template <typename T>
    CVector<T> channel_gains(const LinkScenario<T> &s)
    {
        CVector<T> H(s.grid.subcarrier_count);
        for (Index p = 0; p < H.size(); ++p)
            H[p] = total_gain(s, p);
        return H;
    }

    template <typename T>
    RVector<T> snr(const LinkScenario<T> &s, const CVector<T> &H)
    {
        const T scale = s.budget.power_watts() / s.budget.noise_power_watts(s.grid);
        return H.cwiseAbs2() * scale;
    }

    template <typename T>
    RVector<T> rates_from_snr(const RVector<T> &snr_lin)
    {
        return snr_lin.unaryExpr([](T x) { return std::log2(T(1) + x); });
    }

    // R_p = log2(1 + P_p |H_p|^2 / sigma^2) [bit/symbol]
    template <typename T>
    T subcarrier_rate(const LinkScenario<T> &s, Index p)
    {
        const T g = std::norm(total_gain(s, p));
        return std::log2(T(1) + s.budget.power_watts() * g / s.budget.noise_power_watts(s.grid));
    }

    // ================================================================================================
    // Delay spread and cyclic prefix
    // ================================================================================================

    template <typename T = double>
    struct DelaySpread
    {
        T guide = T(0);     // Waveguide dispersion over the array aperture [s]
        T freespace = T(0); // Spread of free-space path delays [s]
        T total = T(0);
        bool partial_evanescent = false; // Some subcarriers were below cutoff and excluded
    };

    // |1/v_g(f_low) - 1/v_g(f_high)| * L_array
    template <typename T>
    T waveguide_delay_spread(const WaveguideSpec<T> &wg, T f_low, T f_high, T array_length, T c = speed_of_light<T>)
    {
        return std::abs(inverse_group_velocity(wg, f_low, c) - inverse_group_velocity(wg, f_high, c)) * array_length;
    }

    template <typename T>
    T freespace_delay_spread(const UserGeometry<T> &user, const RVector<T> &positions, T c = speed_of_light<T>)
    {
        const RVector<T> d = pa_user_distances(user, positions);
        return (d.maxCoeff() - d.minCoeff()) / c;
    }

    // Guide term evaluated between the lowest and highest propagating subcarriers
    template <typename T>
    DelaySpread<T> delay_spread(const LinkScenario<T> &s)
    {
        const T f0 = cutoff_frequency(s.waveguide, s.c);
        const Index P = s.grid.subcarrier_count;

        Index first = 0;
        while (first < P && !(s.grid.frequency(first) > f0))
            ++first;
        if (first == P)
            throw no_propagating_error("delay_spread: no subcarrier lies above the cutoff frequency");

        DelaySpread<T> out;
        out.partial_evanescent = first > 0;
        const T aperture = s.positions[s.num_pas() - 1] - s.positions[0];
        out.guide = waveguide_delay_spread(s.waveguide, s.grid.frequency(first), s.grid.highest(), aperture, s.c);
        out.freespace = freespace_delay_spread(s.user, s.positions, s.c);
        out.total = out.guide + out.freespace;
        return out;
    }

    template <typename T = double>
    struct CpRequirement
    {
        Index samples = 0;         // L_CP
        T overhead_percent = T(0); // Unrounded delay spread over useful symbol duration
    };

    template <typename T>
    CpRequirement<T> cp_requirement(const DelaySpread<T> &spread, const OfdmGrid<T> &grid)
    {
        CpRequirement<T> out;
        out.samples = static_cast<Index>(std::ceil(spread.total * grid.bandwidth));
        out.overhead_percent = spread.total / grid.symbol_duration() * T(100);
        return out;
    }

    template <typename T>
    CpRequirement<T> cp_requirement(const LinkScenario<T> &s)
    {
        return cp_requirement(delay_spread(s), s.grid);
    }

    // CP-normalized rate: sum_p R_p / (P + L_CP)
    template <typename T>
    T total_rate(const RVector<T> &rates, Index cp_samples)
    {
        return rates.sum() / T(rates.size() + cp_samples);
    }

    template <typename T>
    T total_rate(const LinkScenario<T> &s)
    {
        const Index cp = s.cp_samples ? *s.cp_samples : cp_requirement(s).samples;
        return total_rate<T>(rates_from_snr<T>(snr(s, channel_gains(s))), cp);
    }

    // ================================================================================================
    // Full evaluation
    // ================================================================================================

    template <typename T = double>
    struct ChannelResponse
    {
        CVector<T> gains; // H_p
        RVector<T> snr;   // Linear
        RVector<T> rate;  // R_p [bit/symbol]
        DelaySpread<T> spread;
        Index cp_samples = 0;
        T overhead_percent = T(0);
        T sum_rate = T(0);   // sum_p R_p
        T total_rate = T(0); // sum_p R_p / (P + L_CP)
    };

    template <typename T>
    ChannelResponse<T> evaluate(const LinkScenario<T> &s)
    {
        ChannelResponse<T> r;
        r.gains = channel_gains(s);
        r.snr = snr(s, r.gains);
        r.rate = rates_from_snr<T>(r.snr);
        r.spread = delay_spread(s);
        const auto cp = cp_requirement(r.spread, s.grid);
        r.cp_samples = s.cp_samples ? *s.cp_samples : cp.samples;
        r.overhead_percent = cp.overhead_percent;
        r.sum_rate = r.rate.sum();
        r.total_rate = total_rate<T>(r.rate, r.cp_samples);
        return r;
    }
}

#endif
