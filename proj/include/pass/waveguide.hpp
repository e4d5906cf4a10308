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

#ifndef PASS_WAVEGUIDE_HPP
#define PASS_WAVEGUIDE_HPP

#include "pass/types.hpp"

#include <cmath>
#include <optional>

namespace pass
{
    // Rectangular dielectric waveguide operated in the TE10 mode
    template <typename T = double>
    struct WaveguideSpec
    {
        T width_a = T(0.01);      // Broad dimension a [m]
        T total_length = T(20.0); // L_WG [m]
        T attenuation = T(0.0);   // Frequency-flat amplitude attenuation of the propagating mode [Np/m]

        void validate() const
        {
            if (!(width_a > T(0)) || !std::isfinite(width_a))
                throw validation_error("width_a", "waveguide width must be positive and finite");
            if (!(total_length > T(0)) || !std::isfinite(total_length))
                throw validation_error("total_length", "waveguide length must be positive and finite");
            if (!(attenuation >= T(0)) || !std::isfinite(attenuation))
                throw validation_error("attenuation", "attenuation constant must be non-negative");
        }
    };

    // Field state of the guided TE10 wave at a single frequency.
    // Above cutoff only phase_constant is nonzero; below cutoff only decay_constant is.
    // Exactly at cutoff both are zero and no group velocity exists.
    template <typename T = double>
    struct GuidedWaveState
    {
        T frequency = T(0);
        T phase_constant = T(0);          // beta_g [rad/m]
        T decay_constant = T(0);          // Evanescent decay [Np/m]
        std::optional<T> group_velocity;  // v_g [m/s], propagating regime only

        bool propagating() const { return group_velocity.has_value(); }
    };

    template <typename T>
    T cutoff_frequency(const WaveguideSpec<T> &spec, T c = speed_of_light<T>)
    {
        return c / (T(2) * spec.width_a);
    }

    template <typename T>
    GuidedWaveState<T> guided_state(const WaveguideSpec<T> &spec, T f, T c = speed_of_light<T>)
    {
        const T f0 = cutoff_frequency(spec, c);
        GuidedWaveState<T> st;
        st.frequency = f;

        // sqrt(k^2 - kc^2) written as (2 pi / c) sqrt((f - f0)(f + f0)) to avoid cancellation near cutoff
        if (f > f0)
        {
            st.phase_constant = two_pi<T> / c * std::sqrt((f - f0) * (f + f0));
            st.group_velocity = c * std::sqrt((f - f0) * (f + f0)) / f;
        }
        else if (f < f0)
            st.decay_constant = two_pi<T> / c * std::sqrt((f0 - f) * (f0 + f));

        return st;
    }

    // Phase constant beta_g(f); zero at or below cutoff
    template <typename T>
    T phase_constant(const WaveguideSpec<T> &spec, T f, T c = speed_of_light<T>)
    {
        return guided_state(spec, f, c).phase_constant;
    }

    // d(beta_g)/d(omega) = 1 / v_g(f)
    template <typename T>
    T inverse_group_velocity(const WaveguideSpec<T> &spec, T f, T c = speed_of_light<T>)
    {
        const T f0 = cutoff_frequency(spec, c);
        if (!(f > f0))
            throw evanescent_error("group velocity undefined at or below the cutoff frequency");
        return f / (c * std::sqrt((f - f0) * (f + f0)));
    }

    template <typename T>
    T group_delay(const WaveguideSpec<T> &spec, T f, T distance, T c = speed_of_light<T>)
    {
        if (!(distance >= T(0)))
            throw std::invalid_argument("group_delay: distance must be non-negative");
        return distance * inverse_group_velocity(spec, f, c);
    }

    // In-guide transfer function T(f) = exp(-gamma(f) * distance).
    // Below cutoff this is a real decaying exponential that underflows to zero.
    template <typename T>
    Complex<T> transfer_function(const WaveguideSpec<T> &spec, T f, T distance, T c = speed_of_light<T>)
    {
        if (!(distance >= T(0)) || distance > spec.total_length)
            throw std::out_of_range("transfer_function: distance outside [0, total_length]");

        const auto st = guided_state(spec, f, c);
        if (st.decay_constant > T(0))
            return Complex<T>(std::exp(-st.decay_constant * distance), T(0));

        return std::exp(-spec.attenuation * distance) * std::polar(T(1), -st.phase_constant * distance);
    }
}

#endif
