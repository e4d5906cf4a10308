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

#ifndef PASS_COUPLING_HPP
#define PASS_COUPLING_HPP

#include "pass/waveguide.hpp"

#include <algorithm>
#include <span>
#include <variant>
#include <vector>

namespace pass
{
    // Coupling coefficient independent of frequency: kappa(f) = kappa_c
    struct ConstantCoupling
    {
    };

    // Tabulated kappa(f), linearly interpolated and held constant beyond the end points
    template <typename T = double>
    struct CouplingTable
    {
        RVector<T> frequency; // Strictly increasing [Hz]
        RVector<T> kappa;     // [1/m], same length as frequency
    };

    template <typename T = double>
    using CouplingModel = std::variant<ConstantCoupling, CouplingTable<T>>;

    // Parameters of one pinching antenna
    template <typename T = double>
    struct PinchSpec
    {
        T coupling_length = pi<T> / T(20);        // L_n [m]
        T coupling_coefficient_at_center = T(10); // kappa_c [1/m]
        CouplingModel<T> coupling_model = ConstantCoupling{};
        T effective_index = T(1.5); // n_p

        void validate() const
        {
            if (!(coupling_length > T(0)) || !std::isfinite(coupling_length))
                throw validation_error("coupling_length", "coupling length must be positive");
            if (!(coupling_coefficient_at_center > T(0)) || !std::isfinite(coupling_coefficient_at_center))
                throw validation_error("coupling_coefficient", "coupling coefficient must be positive");
            if (!(effective_index >= T(1)) || !std::isfinite(effective_index))
                throw validation_error("effective_index", "effective index must be >= 1");

            if (const auto *table = std::get_if<CouplingTable<T>>(&coupling_model))
            {
                if (table->frequency.size() == 0 || table->frequency.size() != table->kappa.size())
                    throw validation_error("kappa_table", "table must be non-empty with matching column lengths");
                for (Index i = 0; i < table->kappa.size(); ++i)
                    if (!(table->kappa[i] > T(0)))
                        throw validation_error("kappa_table", "kappa values must be positive");
                for (Index i = 1; i < table->frequency.size(); ++i)
                    if (!(table->frequency[i] > table->frequency[i - 1]))
                        throw validation_error("kappa_table", "frequencies must be strictly increasing");
            }
        }
    };

    // Result of one guide-to-PA coupling section
    template <typename T = double>
    struct CouplingFactors
    {
        Complex<T> local_pa_factor;    // alpha'_PA = B(L)
        Complex<T> residual_wg_factor; // alpha'_WG = A(L)
        Complex<T> effective_factor;   // alpha'' including extraction by preceding PAs
        T phase_mismatch = T(0);       // Delta beta [rad/m]
        T interaction_parameter = T(0); // S [rad/m]
    };

    template <typename T>
    T coupling_coefficient(const PinchSpec<T> &spec, T f)
    {
        if (const auto *table = std::get_if<CouplingTable<T>>(&spec.coupling_model))
        {
            const auto &fq = table->frequency;
            const Index n = fq.size();
            if (f <= fq[0])
                return table->kappa[0];
            if (f >= fq[n - 1])
                return table->kappa[n - 1];
            const Index hi = std::upper_bound(fq.data(), fq.data() + n, f) - fq.data();
            const T w = (f - fq[hi - 1]) / (fq[hi] - fq[hi - 1]);
            return (T(1) - w) * table->kappa[hi - 1] + w * table->kappa[hi];
        }
        return spec.coupling_coefficient_at_center;
    }

    // beta_p(f) = (2 pi f / c) n_p
    template <typename T>
    T pa_phase_constant(const PinchSpec<T> &spec, T f, T c = speed_of_light<T>)
    {
        return two_pi<T> * f / c * spec.effective_index;
    }

    template <typename T>
    T phase_mismatch(const WaveguideSpec<T> &wg, const PinchSpec<T> &spec, T f, T c = speed_of_light<T>)
    {
        if (!(f > cutoff_frequency(wg, c)))
            throw evanescent_error("phase mismatch undefined at or below the cutoff frequency");
        return phase_constant(wg, f, c) - pa_phase_constant(spec, f, c);
    }

    namespace detail
    {
        // Total version of phase_mismatch: below cutoff the guide contributes no phase
        template <typename T>
        T guide_mismatch(const WaveguideSpec<T> &wg, const PinchSpec<T> &spec, T f, T c)
        {
            return phase_constant(wg, f, c) - pa_phase_constant(spec, f, c);
        }
    }

    // Closed-form coupled-mode solution over the coupling length, A(0) = 1, B(0) = 0
    template <typename T>
    CouplingFactors<T> local_factors(const PinchSpec<T> &spec, T delta_beta, T f)
    {
        const T kappa = coupling_coefficient(spec, f);
        const T half = delta_beta / T(2);
        const T S = std::sqrt(kappa * kappa + half * half);
        const T L = spec.coupling_length;
        const T sl = S * L;
        const T s = std::sin(sl);

        CouplingFactors<T> out;
        out.phase_mismatch = delta_beta;
        out.interaction_parameter = S;
        out.local_pa_factor = Complex<T>(T(0), -kappa / S * s) * std::polar(T(1), half * L);
        out.residual_wg_factor = Complex<T>(std::cos(sl), half / S * s) * std::polar(T(1), -half * L);
        out.effective_factor = out.local_pa_factor;
        return out;
    }

    // One entry per PA plus the amplitude left in the guide after the last PA
    template <typename T>
    struct CascadeFactors
    {
        std::vector<CouplingFactors<T>> stages;
        Complex<T> remainder = Complex<T>(1);
    };

    // Cascade through the array in feed order. Inter-PA propagation is excluded here;
    // it enters the end-to-end gain through the transfer function.
    // With phase_matched set, Delta beta is forced to zero in every section.
    template <typename T>
    CascadeFactors<T> cascade(std::span<const PinchSpec<T>> array, const WaveguideSpec<T> &wg, T f,
                              T c = speed_of_light<T>, bool phase_matched = false)
    {
        if (array.empty())
            throw std::invalid_argument("cascade: PA array is empty");

        CascadeFactors<T> out;
        out.stages.reserve(array.size());
        for (const auto &pa : array)
        {
            const T dbeta = phase_matched ? T(0) : detail::guide_mismatch(wg, pa, f, c);
            auto stage = local_factors(pa, dbeta, f);
            stage.effective_factor = out.remainder * stage.local_pa_factor;
            out.remainder *= stage.residual_wg_factor;
            out.stages.push_back(stage);
        }
        return out;
    }

    template <typename T>
    CVector<T> cascaded_coupling(std::span<const PinchSpec<T>> array, const WaveguideSpec<T> &wg, T f,
                                 T c = speed_of_light<T>)
    {
        if (!(f > cutoff_frequency(wg, c)))
            throw evanescent_error("cascaded_coupling: frequency at or below cutoff");

        const auto cas = cascade(array, wg, f, c);
        CVector<T> eff(static_cast<Index>(cas.stages.size()));
        for (Index n = 0; n < eff.size(); ++n)
            eff[n] = cas.stages[static_cast<std::size_t>(n)].effective_factor;
        return eff;
    }
}

#endif
