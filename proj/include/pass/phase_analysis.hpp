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


#ifndef PASS_PHASE_ANALYSIS_HPP
#define PASS_PHASE_ANALYSIS_HPP

#include "pass/link.hpp"

#include <algorithm>
#include <limits>

namespace pass
{
    // Terms of the accumulated phase delay Phi such that E_n ~ exp(-j Phi), relative to the guide input.
    // All terms are continuous in frequency; none is obtained by arg() of a product.
    template <typename T = double>
    struct PhaseBreakdown
    {
        T guide_phase = T(0);                // beta_g * x_n
        T accumulated_residual_phase = T(0); // sum_{i<n} arg alpha'_WG,i
        T coupling_phase = T(0);             // Delta beta L_n / 2 - pi / 2
        T freespace_phase = T(0);            // 2 pi f d / c
        T total = T(0);                      // guide - accumulated - coupling + freespace

        // sin(S L) < 0: the true arg(alpha'_PA) differs from coupling_phase by pi
        bool coupling_sign_flipped = false;
    };

    // Continuous phase of cos(u) + j r sin(u) for |r| < 1, u >= 0
    template <typename T>
    T unwrapped_bracket_phase(T u, T r)
    {
        if (r == T(0))
            return std::cos(u) < T(0) ? pi<T> : T(0);
        const T k = std::round(u / pi<T>);
        const T sgn = r > T(0) ? T(1) : T(-1);
        return sgn * k * pi<T> + std::atan(r * std::tan(u - k * pi<T>));
    }

    // Unwrapped arg(alpha'_WG) of one coupling section
    template <typename T>
    T residual_phase(const CouplingFactors<T> &cf, T coupling_length)
    {
        const T S = cf.interaction_parameter;
        const T r = cf.phase_mismatch / (T(2) * S);
        return unwrapped_bracket_phase(S * coupling_length, r) - cf.phase_mismatch * coupling_length / T(2);
    }

    namespace detail
    {
        template <typename T>
        CascadeFactors<T> phase_cascade(const LinkScenario<T> &s, T f)
        {
            if (!(f > cutoff_frequency(s.waveguide, s.c)))
                throw evanescent_error("phase analysis requires a propagating frequency");
            // FrequencyIndependentAtFmax has no phase meaning per subcarrier; it is analysed as Practical
            return cascade(s.pinch_span(), s.waveguide, f, s.c, s.variant == ModelVariant::IdealPhaseMatched);
        }

        template <typename T>
        T coupling_phase(const CouplingFactors<T> &cf, T coupling_length)
        {
            return cf.phase_mismatch * coupling_length / T(2) - pi<T> / T(2);
        }

        template <typename T>
        void check_pair(const LinkScenario<T> &s, Index n)
        {
            if (n < 1 || n >= s.num_pas())
                throw std::invalid_argument("adjacent phase difference needs 1 <= n < N");
        }
    }

    // Phi_n(f) for PA n (0-based)
    template <typename T>
    PhaseBreakdown<T> accumulated_phase(const LinkScenario<T> &s, Index n, T f)
    {
        const auto cas = detail::phase_cascade(s, f);

        PhaseBreakdown<T> b;
        b.guide_phase = phase_constant(s.waveguide, f, s.c) * s.positions[n];
        for (Index i = 0; i < n; ++i)
            b.accumulated_residual_phase += residual_phase(cas.stages[static_cast<std::size_t>(i)],
                                                           s.pinches[static_cast<std::size_t>(i)].coupling_length);

        const auto &stage = cas.stages[static_cast<std::size_t>(n)];
        const T Ln = s.pinches[static_cast<std::size_t>(n)].coupling_length;
        b.coupling_phase = detail::coupling_phase(stage, Ln);
        b.coupling_sign_flipped = std::sin(stage.interaction_parameter * Ln) < T(0);
        b.freespace_phase = two_pi<T> * f / s.c * pa_user_distance(s.user, s.positions[n]);
        b.total = b.guide_phase - b.accumulated_residual_phase - b.coupling_phase + b.freespace_phase;
        return b;
    }

    // Phi_n - Phi_{n-1} from the complete phase expression
    template <typename T>
    T adjacent_phase_difference_exact(const LinkScenario<T> &s, Index n, T f)
    {
        detail::check_pair(s, n);
        return accumulated_phase(s, n, f).total - accumulated_phase(s, n - 1, f).total;
    }

    // Exact difference split into the part the linearization keeps and the residual-phase
    // term it drops: exact = lemma_form + dropped_residual
    template <typename T = double>
    struct AdjacentPhaseTerms
    {
        T lemma_form = T(0);       // beta_g dx + 2 pi f dd / c - d(coupling phase)
        T dropped_residual = T(0); // -arg alpha'_WG,n-1
    };

    template <typename T>
    AdjacentPhaseTerms<T> adjacent_phase_terms(const LinkScenario<T> &s, Index n, T f)
    {
        detail::check_pair(s, n);
        const auto cas = detail::phase_cascade(s, f);
        const auto &cur = cas.stages[static_cast<std::size_t>(n)];
        const auto &prev = cas.stages[static_cast<std::size_t>(n - 1)];
        const T Ln = s.pinches[static_cast<std::size_t>(n)].coupling_length;
        const T Lp = s.pinches[static_cast<std::size_t>(n - 1)].coupling_length;

        const T dx = s.positions[n] - s.positions[n - 1];
        const T dd = pa_user_distance(s.user, s.positions[n]) - pa_user_distance(s.user, s.positions[n - 1]);

        AdjacentPhaseTerms<T> t;
        t.lemma_form = phase_constant(s.waveguide, f, s.c) * dx + two_pi<T> * f / s.c * dd -
                       (detail::coupling_phase(cur, Ln) - detail::coupling_phase(prev, Lp));
        t.dropped_residual = -residual_phase(prev, Lp);
        return t;
    }

    // d(Delta Phi)/df at the centre frequency: 2 pi dx / v_g(f_c) + 2 pi dd / c
    template <typename T>
    T linearized_slope(const LinkScenario<T> &s, Index n)
    {
        detail::check_pair(s, n);
        const T fc = s.grid.center_frequency;
        const T dx = s.positions[n] - s.positions[n - 1];
        const T dd = pa_user_distance(s.user, s.positions[n]) - pa_user_distance(s.user, s.positions[n - 1]);
        return two_pi<T> * dx * inverse_group_velocity(s.waveguide, fc, s.c) + two_pi<T> / s.c * dd;
    }

    // First-order expansion around f_c; the offset term vanishes identically at f = f_c
    template <typename T>
    T adjacent_phase_difference_linearized(const LinkScenario<T> &s, Index n, T f)
    {
        const T fc = s.grid.center_frequency;
        return linearized_slope(s, n) * (f - fc) + adjacent_phase_terms(s, n, fc).lemma_form;
    }

    template <typename T = double>
    struct PhaseVariation
    {
        T exact = T(0);
        T linearized = T(0);
    };

    // max over adjacent pairs of (max_p - min_p) of Delta Phi over the subcarrier grid
    template <typename T>
    PhaseVariation<T> max_adjacent_variation(const LinkScenario<T> &s)
    {
        if (s.num_pas() < 2)
            throw std::invalid_argument("max_adjacent_variation: needs at least two PAs");

        const RVector<T> f = s.grid.frequencies();
        const T fc = s.grid.center_frequency;
        PhaseVariation<T> out;
        for (Index n = 1; n < s.num_pas(); ++n)
        {
            // The constant Delta Phi_{n,c} does not change the range of the linearized form
            const T slope = linearized_slope(s, n);
            T lo_e = std::numeric_limits<T>::infinity(), hi_e = -lo_e;
            T lo_l = lo_e, hi_l = -lo_e;
            for (Index p = 0; p < f.size(); ++p)
            {
                const T e = adjacent_phase_difference_exact(s, n, f[p]);
                const T l = slope * (f[p] - fc);
                lo_e = std::min(lo_e, e), hi_e = std::max(hi_e, e);
                lo_l = std::min(lo_l, l), hi_l = std::max(hi_l, l);
            }
            out.exact = std::max(out.exact, hi_e - lo_e);
            out.linearized = std::max(out.linearized, hi_l - lo_l);
        }
        return out;
    }
}

#endif
