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

#pragma once

#include <random>
#include <vector>

namespace hstsim {

/// Straight 1-D track with sites placed at a fixed perpendicular offset.
/// UEs ride on the track line itself.
struct TrackLayout {
    std::vector<double> site_positions_m;  // strictly increasing
    double site_lateral_offset_m = 5.0;
    double ru_height_m = 30.0;
    double ue_height_m = 1.5;

    bool operator==(const TrackLayout&) const = default;
};

/// n_sites equidistant sites starting at 0, spaced inter_ru_distance_m apart.
TrackLayout make_track_layout(int n_sites, double inter_ru_distance_m,
                              double site_lateral_offset_m, double ru_height_m,
                              double ue_height_m);

/// Directional transmitter at a site. boresight +1 points toward increasing
/// track coordinates, -1 toward decreasing ones.
struct RadioUnit {
    int id = 0;
    int site_index = 0;
    int boresight = +1;
    double tx_power_w = 40.0;
    int n_tx_antennas = 2;
};

/// Two back-to-back RUs per site: id 2*site for the backward-facing one
/// (boresight -1), 2*site+1 for the forward-facing one (+1).
std::vector<RadioUnit> make_radio_units(const TrackLayout& layout, double tx_power_w,
                                        int n_tx_antennas);

struct TrainState {
    double length_m = 200.84;
    double speed_mps = 200.0 / 3.6;
    double center_m = 0.0;
};

/// Within-train UE positions, offsets in [0, train length].
struct UeSet {
    std::vector<double> offsets_m;
    int count() const { return static_cast<int>(offsets_m.size()); }
};

/// count i.i.d. uniform offsets on [0, train_length_m]. Reproducible for a
/// fixed generator state. Throws std::invalid_argument on count < 1 or
/// non-positive length.
UeSet place_ues(int count, double train_length_m, std::mt19937_64& rng);

/// Track coordinate per UE: center - length/2 + offset, order preserved.
std::vector<double> ue_track_positions(const TrainState& train, const UeSet& ues);

struct LinkGeometry {
    double distance_3d_m = 0.0;
    double boresight_angle_deg = 0.0;  // angle RU boresight <-> horizontal direction to UE, [0, 180]
};

LinkGeometry link_geometry(double ue_pos_m, const RadioUnit& ru, const TrackLayout& layout);

}  // namespace hstsim
