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

#ifndef PASS_TYPES_HPP
#define PASS_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pass
{
    template <typename T>
    using Complex = std::complex<T>;

    // Column vectors, one entry per PA or per subcarrier
    template <typename T>
    using RVector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

    template <typename T>
    using CVector = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, 1>;

    template <typename T>
    using Point3 = Eigen::Matrix<T, 3, 1>;

    using Index = Eigen::Index;

    // Speed of light in vacuum [m/s]
    template <typename T>
    inline constexpr T speed_of_light = T(2.99792458e8);

    // Rounded value that reproduces f0 = 15 GHz for a = 1 cm exactly
    template <typename T>
    inline constexpr T speed_of_light_rounded = T(3.0e8);

    template <typename T>
    inline constexpr T pi = std::numbers::pi_v<T>;

    template <typename T>
    inline constexpr T two_pi = T(2) * std::numbers::pi_v<T>;

    // ---- Errors -----------------------------------------------------------------------------

    // A scenario or parameter violates an invariant; field() names the offending input
    class validation_error : public std::invalid_argument
    {
    public:
        validation_error(std::string field, const std::string &what)
            : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

        const std::string &field() const noexcept { return field_; }

    private:
        std::string field_;
    };

    // PA positions fall outside [0, L_WG]
    class placement_error : public validation_error
    {
    public:
        explicit placement_error(const std::string &what)
            : validation_error("pa_positions", what) {}
    };

    // Requested quantity does not exist below cutoff (delay, phase)
    class evanescent_error : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // No subcarrier of the grid lies above cutoff
    class no_propagating_error : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };
}

#endif
