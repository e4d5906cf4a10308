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


#ifndef PASS_RADIATION_HPP
#define PASS_RADIATION_HPP

#include "pass/types.hpp"

#include <cmath>

namespace pass
{
    // Single-antenna user on the ground plane, waveguide suspended at height h above the x-axis
    template <typename T = double>
    struct UserGeometry
    {
        Point3<T> position = Point3<T>(T(5), T(2), T(0)); // psi_u = (x_u, y_u, 0) [m]
        T waveguide_height = T(5);                        // h [m]

        T x() const { return position.x(); }

        void validate() const
        {
            if (!position.allFinite())
                throw validation_error("user_position", "user position must be finite");
            if (!(waveguide_height > T(0)) || !std::isfinite(waveguide_height))
                throw validation_error("waveguide_height", "waveguide height must be positive");
        }
    };

    template <typename T>
    T pa_user_distance(const UserGeometry<T> &user, T x_n)
    {
        const Point3<T> pa(x_n, T(0), user.waveguide_height);
        return (user.position - pa).norm();
    }

    // Distances from each PA position to the user
    template <typename T>
    RVector<T> pa_user_distances(const UserGeometry<T> &user, const RVector<T> &positions)
    {
        return positions.unaryExpr([&](T x) { return pa_user_distance(user, x); });
    }

    // Isotropic line-of-sight channel h = c / (4 pi f d) * exp(-j 2 pi f d / c)
    template <typename T>
    Complex<T> freespace_gain(const UserGeometry<T> &user, T x_n, T f, T c = speed_of_light<T>)
    {
        const T d = pa_user_distance(user, x_n);
        if (!(d > T(0)))
            throw std::domain_error("freespace_gain: PA and user are collocated");
        return std::polar(c / (T(2) * two_pi<T> * f * d), -two_pi<T> * f * d / c);
    }
}

#endif
