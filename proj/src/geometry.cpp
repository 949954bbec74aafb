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

#include "hstsim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hstsim {

TrackLayout make_track_layout(int n_sites, double inter_ru_distance_m,
                              double site_lateral_offset_m, double ru_height_m,
                              double ue_height_m) {
    if (n_sites < 1) throw std::invalid_argument("make_track_layout: n_sites must be >= 1");
    if (inter_ru_distance_m <= 0.0)
        throw std::invalid_argument("make_track_layout: inter_ru_distance_m must be > 0");
    if (site_lateral_offset_m < 0.0)
        throw std::invalid_argument("make_track_layout: site_lateral_offset_m must be >= 0");
    if (ru_height_m <= 0.0 || ue_height_m <= 0.0)
        throw std::invalid_argument("make_track_layout: antenna heights must be > 0");

    TrackLayout layout;
    layout.site_positions_m.reserve(static_cast<std::size_t>(n_sites));
    for (int i = 0; i < n_sites; ++i)
        layout.site_positions_m.push_back(static_cast<double>(i) * inter_ru_distance_m);
    layout.site_lateral_offset_m = site_lateral_offset_m;
    layout.ru_height_m = ru_height_m;
    layout.ue_height_m = ue_height_m;
    return layout;
}

std::vector<RadioUnit> make_radio_units(const TrackLayout& layout, double tx_power_w,
                                        int n_tx_antennas) {
    if (tx_power_w <= 0.0) throw std::invalid_argument("make_radio_units: tx_power_w must be > 0");
    std::vector<RadioUnit> rus;
    rus.reserve(2 * layout.site_positions_m.size());
    for (int site = 0; site < static_cast<int>(layout.site_positions_m.size()); ++site) {
        rus.push_back(RadioUnit{2 * site, site, -1, tx_power_w, n_tx_antennas});
        rus.push_back(RadioUnit{2 * site + 1, site, +1, tx_power_w, n_tx_antennas});
    }
    return rus;
}

UeSet place_ues(int count, double train_length_m, std::mt19937_64& rng) {
    if (count < 1) throw std::invalid_argument("place_ues: count must be >= 1");
    if (train_length_m <= 0.0) throw std::invalid_argument("place_ues: train length must be > 0");
    std::uniform_real_distribution<double> offset(0.0, train_length_m);
    UeSet ues;
    ues.offsets_m.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) ues.offsets_m.push_back(offset(rng));
    return ues;
}

std::vector<double> ue_track_positions(const TrainState& train, const UeSet& ues) {
    const double tail = train.center_m - train.length_m / 2.0;
    std::vector<double> positions;
    positions.reserve(ues.offsets_m.size());
    for (double offset : ues.offsets_m) positions.push_back(tail + offset);
    return positions;
}

LinkGeometry link_geometry(double ue_pos_m, const RadioUnit& ru, const TrackLayout& layout) {
    const double site_x = layout.site_positions_m.at(static_cast<std::size_t>(ru.site_index));
    const double dx = ue_pos_m - site_x;                        // along track
    const double dy = layout.site_lateral_offset_m;             // perpendicular
    const double dz = layout.ru_height_m - layout.ue_height_m;  // vertical
    const double horizontal = std::hypot(dx, dy);

    LinkGeometry g;
    g.distance_3d_m = std::hypot(horizontal, dz);
    if (horizontal == 0.0) {
        g.boresight_angle_deg = 90.0;  // directly underneath; direction degenerate
        return g;
    }
    const double cos_theta = std::clamp(static_cast<double>(ru.boresight) * dx / horizontal, -1.0, 1.0);
    g.boresight_angle_deg = std::acos(cos_theta) * 180.0 / std::numbers::pi;
    return g;
}

}  // namespace hstsim
