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


#include <catch2/catch_amalgamated.hpp>

#include "pass/placement.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    pass::UserGeometry<double> default_user()
    {
        return {};
    }

    const pass::WaveguideSpec<double> wg{0.01, 20.0, 0.0};
}

TEST_CASE("Placement - approximate locations")
{
    const pass::PlacementRule<double> pair{0.2, 0.0, 2};
    const auto x2 = pass::approx_locations(pair, 5.0, wg);
    CHECK_THAT(x2[0], WithinAbs(4.9, 1e-15));
    CHECK_THAT(x2[1], WithinAbs(5.1, 1e-15));

    const auto rule = pass::PlacementRule<double>::from_coupling_length(pass::pi<double> / 20, 0.05, 8);
    CHECK_THAT(rule.min_spacing, WithinRel(0.207079632679490, 1e-14));
    const auto x = pass::approx_locations(rule, 5.0, wg);
    REQUIRE(x.size() == 8);
    CHECK_THAT(x[0], WithinRel(4.27522128562179, 1e-14));
    CHECK_THAT(x[7], WithinRel(5.72477871437821, 1e-14));
    for (pass::Index n = 1; n < x.size(); ++n)
        CHECK_THAT(x[n] - x[n - 1], WithinRel(rule.min_spacing, 1e-12));

    for (pass::Index N : {1, 2, 3, 7, 12})
    {
        const auto r = pass::PlacementRule<double>::from_coupling_length(0.1, 0.03, N);
        CHECK_THAT(pass::approx_locations(r, 9.3, wg).mean(), WithinAbs(9.3, 1e-13));
    }
}

TEST_CASE("Placement - errors")
{
    const auto rule = pass::PlacementRule<double>::from_coupling_length(0.5, 0.5, 8);
    CHECK_THROWS_AS(pass::approx_locations(rule, 1.0, wg), pass::placement_error);
    CHECK_THROWS_AS(pass::approx_locations(rule, 19.5, wg), pass::placement_error);
    CHECK_THROWS_AS(pass::PlacementRule<double>::from_coupling_length(0.1, 0.05, 0), pass::validation_error);
    CHECK_THROWS_AS(pass::PlacementRule<double>::from_coupling_length(0.1, -0.05, 3), pass::validation_error);
}

TEST_CASE("Placement - unimodality condition")
{
    const auto rule = pass::PlacementRule<double>::from_coupling_length(pass::pi<double> / 20, 0.05, 8);
    CHECK(pass::unimodality_check(rule, default_user())); // 29 >= 2.101

    CHECK(pass::unimodality_check(pass::PlacementRule<double>{5.0, 0.0, 1}, default_user()));

    pass::UserGeometry<double> flat;
    flat.position = pass::Point3<double>(5, 0, 0);
    flat.waveguide_height = 0.0; // Degenerate geometry, deliberately not validated
    CHECK_FALSE(pass::unimodality_check(rule, flat));
}

TEST_CASE("Placement - geometric path gain")
{
    const auto u = default_user();
    CHECK_THAT(pass::geometric_path_gain<double>(Eigen::VectorXd::Constant(1, 5.0), u),
               WithinRel(0.185695338177052, 1e-14));

    const Eigen::Vector3d x(3.0, 4.5, 7.0);
    pass::UserGeometry<double> moved = u;
    moved.position.x() += 2.5;
    const Eigen::Vector3d shifted = (x.array() + 2.5).matrix();
    CHECK_THAT(pass::geometric_path_gain<double>(shifted, moved), WithinRel(pass::geometric_path_gain<double>(x, u), 1e-14));
}

TEST_CASE("Placement - centred placement beats every shifted equal-spacing placement")
{
    const auto u = default_user();
    for (pass::Index N : {2, 4, 8, 12})
    {
        const auto rule = pass::PlacementRule<double>::from_coupling_length(pass::pi<double> / 20, 0.05, N);
        REQUIRE(pass::unimodality_check(rule, u));
        const auto best = pass::approx_locations(rule, u.x(), wg);
        const double g_best = pass::geometric_path_gain<double>(best, u);

        const double delta = rule.min_spacing;
        for (int k = -3000; k <= 3000; ++k)
        {
            const Eigen::VectorXd trial = (best.array() + k * delta / 1000.0).matrix();
            CHECK(pass::geometric_path_gain<double>(trial, u) <= g_best + 1e-12);
        }
    }
}
