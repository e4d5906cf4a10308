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


#ifndef PASS_PLACEMENT_HPP
#define PASS_PLACEMENT_HPP

#include "pass/radiation.hpp"
#include "pass/waveguide.hpp"

namespace pass
{
    // Equal-spacing placement around the user: spacing Delta = L_n + G between adjacent PAs
    template <typename T = double>
    struct PlacementRule
    {
        T min_spacing = T(0); // Delta [m]
        T guard_gap = T(0);   // G [m]
        Index count = 1;      // N

        static PlacementRule from_coupling_length(T coupling_length, T guard_gap, Index count)
        {
            if (!(coupling_length > T(0)))
                throw validation_error("coupling_length", "coupling length must be positive");
            if (!(guard_gap >= T(0)) || !std::isfinite(guard_gap))
                throw validation_error("guard_gap", "guard gap must be non-negative");
            if (count < 1)
                throw validation_error("num_pas", "at least one PA is required");
            return PlacementRule{coupling_length + guard_gap, guard_gap, count};
        }
    };

    // x_n = x_u + (n - (N-1)/2) Delta, n = 0..N-1. Positions outside the guide are an error, not clamped.
    template <typename T>
    RVector<T> approx_locations(const PlacementRule<T> &rule, T x_u, const WaveguideSpec<T> &wg)
    {
        const T centre = T(rule.count - 1) / T(2);
        RVector<T> x(rule.count);
        for (Index n = 0; n < rule.count; ++n)
            x[n] = x_u + (T(n) - centre) * rule.min_spacing;

        if (x.minCoeff() < T(0) || x.maxCoeff() > wg.total_length)
            throw placement_error("approximate PA locations fall outside [0, L_WG]");
        return x;
    }

    // Sufficient condition for the restricted path-gain objective to be unimodal in the first position
    template <typename T>
    bool unimodality_check(const PlacementRule<T> &rule, const UserGeometry<T> &user)
    {
        const T y = user.position.y();
        const T C = y * y + user.waveguide_height * user.waveguide_height;
        const T span = T(rule.count - 1) * rule.min_spacing;
        return C >= span * span;
    }

    template <typename T>
    T geometric_path_gain(const RVector<T> &positions, const UserGeometry<T> &user)
    {
        const T y = user.position.y();
        const T C = y * y + user.waveguide_height * user.waveguide_height;
        return ((positions.array() - user.x()).square() + C).rsqrt().sum();
    }
}

#endif
