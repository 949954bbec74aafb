// SPDX-License-Identifier: Apache-2.0
//
// hst-sim - system-level simulator for track-side cellular service to high speed trains
// Copyright (C) 2026 hst-sim contributors
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

#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "hstsim/geometry.hpp"

using namespace hstsim;

TEST_CASE("track layout: four equidistant sites") {
    const TrackLayout layout = make_track_layout(4, 1000.0, 5.0, 30.0, 1.5);
    REQUIRE(layout.site_positions_m.size() == 4);
    CHECK(layout.site_positions_m == std::vector<double>{0.0, 1000.0, 2000.0, 3000.0});
    for (std::size_t i = 1; i < layout.site_positions_m.size(); ++i)
        CHECK(layout.site_positions_m[i] - layout.site_positions_m[i - 1] ==
              doctest::Approx(1000.0));
    CHECK_THROWS_AS(make_track_layout(0, 1000.0, 5.0, 30.0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(make_track_layout(4, -1.0, 5.0, 30.0, 1.5), std::invalid_argument);
}

TEST_CASE("radio units: two per site, opposite boresights, dense ids") {
    const TrackLayout layout = make_track_layout(4, 1000.0, 5.0, 30.0, 1.5);
    const auto rus = make_radio_units(layout, 40.0, 2);
    REQUIRE(rus.size() == 8);
    for (int site = 0; site < 4; ++site) {
        const RadioUnit& back = rus[static_cast<std::size_t>(2 * site)];
        const RadioUnit& fwd = rus[static_cast<std::size_t>(2 * site + 1)];
        CHECK(back.id == 2 * site);
        CHECK(fwd.id == 2 * site + 1);
        CHECK(back.site_index == site);
        CHECK(fwd.site_index == site);
        CHECK(back.boresight == -1);
        CHECK(fwd.boresight == +1);
        CHECK(back.tx_power_w == 40.0);
        CHECK(back.n_tx_antennas == 2);
    }
}

TEST_CASE("place_ues: range, count, reproducibility") {
    std::mt19937_64 rng(42);
    const UeSet ues = place_ues(46, 200.84, rng);
    REQUIRE(ues.count() == 46);
    for (double off : ues.offsets_m) {
        CHECK(off >= 0.0);
        CHECK(off <= 200.84);
    }

    std::mt19937_64 rng_a(7);
    std::mt19937_64 rng_b(7);
    CHECK(place_ues(46, 200.84, rng_a).offsets_m == place_ues(46, 200.84, rng_b).offsets_m);

    std::mt19937_64 rng_c(1);
    const UeSet one = place_ues(1, 200.84, rng_c);
    REQUIRE(one.count() == 1);
    CHECK(one.offsets_m[0] >= 0.0);
    CHECK(one.offsets_m[0] <= 200.84);
}

TEST_CASE("place_ues: empirical mean matches uniform L/2 over 1e5 draws") {
    std::mt19937_64 rng(123);
    const UeSet ues = place_ues(100000, 200.84, rng);
    double mean = 0.0;
    for (double off : ues.offsets_m) mean += off;
    mean /= ues.count();
    CHECK(std::abs(mean - 100.42) < 1.0);
}

TEST_CASE("place_ues: invalid arguments") {
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(place_ues(0, 200.84, rng), std::invalid_argument);
    CHECK_THROWS_AS(place_ues(-3, 200.84, rng), std::invalid_argument);
    CHECK_THROWS_AS(place_ues(10, -1.0, rng), std::invalid_argument);
}

TEST_CASE("ue_track_positions: arithmetic and order") {
    const TrainState train{200.84, 200.0 / 3.6, 500.0};
    const UeSet ues{{0.0, 100.42, 200.84}};
    const auto pos = ue_track_positions(train, ues);
    REQUIRE(pos.size() == 3);
    CHECK(pos[0] == doctest::Approx(399.58).epsilon(1e-12));
    CHECK(pos[1] == doctest::Approx(500.0).epsilon(1e-12));

    const TrainState at_zero{200.84, 0.0, 0.0};
    const UeSet tip{{200.84}};
    CHECK(ue_track_positions(at_zero, tip)[0] == doctest::Approx(100.42).epsilon(1e-12));
}

TEST_CASE("ue_track_positions: affine in the train center") {
    std::mt19937_64 rng(5);
    const UeSet ues = place_ues(20, 200.84, rng);
    const TrainState a{200.84, 0.0, 1200.0};
    const TrainState b{200.84, 0.0, 1200.0 + 256.0};
    const auto pa = ue_track_positions(a, ues);
    const auto pb = ue_track_positions(b, ues);
    for (std::size_t i = 0; i < pa.size(); ++i)
        CHECK(pb[i] - pa[i] == doctest::Approx(256.0).epsilon(1e-12));
}

TEST_CASE("link_geometry: abeam, collinear, anti-collinear") {
    // abeam: lateral 5 m, height difference 28.5 m
    const TrackLayout layout = make_track_layout(1, 1000.0, 5.0, 30.0, 1.5);
    const RadioUnit fwd{1, 0, +1, 40.0, 2};
    const LinkGeometry abeam = link_geometry(0.0, fwd, layout);
    CHECK(abeam.distance_3d_m ==
          doctest::Approx(std::sqrt(5.0 * 5.0 + 28.5 * 28.5)).epsilon(1e-12));
    CHECK(abeam.distance_3d_m == doctest::Approx(28.94).epsilon(1e-3));
    CHECK(abeam.boresight_angle_deg == doctest::Approx(90.0).epsilon(1e-12));

    // collinear: no lateral offset, equal heights
    const TrackLayout flat = make_track_layout(1, 1000.0, 0.0, 30.0, 30.0);
    const LinkGeometry ahead = link_geometry(1000.0, fwd, flat);
    CHECK(ahead.distance_3d_m == doctest::Approx(1000.0).epsilon(1e-12));
    CHECK(ahead.boresight_angle_deg == doctest::Approx(0.0).scale(1.0));

    const LinkGeometry behind = link_geometry(-100.0, fwd, flat);
    CHECK(behind.boresight_angle_deg == doctest::Approx(180.0).epsilon(1e-12));
}

TEST_CASE("link_geometry: angles stay within [0, 180]") {
    const TrackLayout layout = make_track_layout(4, 1000.0, 5.0, 30.0, 1.5);
    const auto rus = make_radio_units(layout, 40.0, 2);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> pos(-500.0, 3500.0);
    for (int i = 0; i < 500; ++i) {
        const double x = pos(rng);
        for (const RadioUnit& ru : rus) {
            const LinkGeometry g = link_geometry(x, ru, layout);
            CHECK(g.boresight_angle_deg >= 0.0);
            CHECK(g.boresight_angle_deg <= 180.0);
            CHECK(g.distance_3d_m > 0.0);
        }
    }
}

TEST_CASE("mirror symmetry about a site midpoint") {
    const TrackLayout layout = make_track_layout(4, 1000.0, 5.0, 30.0, 1.5);
    const auto rus = make_radio_units(layout, 40.0, 2);
    const double midpoint = 1500.0;  // between sites 1 and 2
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> pos(0.0, 3000.0);
    for (int i = 0; i < 200; ++i) {
        const double x = pos(rng);
        const double x_mirror = 2.0 * midpoint - x;
        for (const RadioUnit& ru : rus) {
            // mirror RU: reflected site, flipped boresight
            const int mirror_site = 3 - ru.site_index;
            const int mirror_id = 2 * mirror_site + (ru.boresight > 0 ? 0 : 1);
            const RadioUnit& mru = rus[static_cast<std::size_t>(mirror_id)];
            const LinkGeometry a = link_geometry(x, ru, layout);
            const LinkGeometry b = link_geometry(x_mirror, mru, layout);
            CHECK(a.distance_3d_m == doctest::Approx(b.distance_3d_m).epsilon(1e-9));
            CHECK(a.boresight_angle_deg == doctest::Approx(b.boresight_angle_deg).epsilon(1e-9));
        }
    }
}
