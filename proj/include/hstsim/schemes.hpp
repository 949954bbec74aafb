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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hstsim/channel.hpp"
#include "hstsim/geometry.hpp"

namespace hstsim {

/// RU collaboration schemes. Relay swaps the onboard UEs for a single
/// roof-mounted virtual UE upstream (see engine) and associates like
/// Baseline.
enum class SchemeKind { Baseline, Coordination, Cooperation, Relay };

std::string to_string(SchemeKind scheme);
std::optional<SchemeKind> scheme_from_string(std::string_view name);

/// RUs whose boresight angle to the UE is <= 90 degrees (inclusive). RUs
/// facing away neither serve nor interfere. Returned sorted by id.
/// Throws std::runtime_error when no RU covers the position.
std::vector<int> visible_rus(double ue_pos_m, std::span<const RadioUnit> rus,
                             const TrackLayout& layout);

/// Association metric: tx power in dBm plus macroscopic gain, no fading.
double wideband_rx_power_dbm(double ue_pos_m, const RadioUnit& ru, const TrackLayout& layout,
                             const PathlossParams& p, const AntennaPattern& pat,
                             double penetration_db);

/// Per-UE link roles. Every visible RU lands in exactly one list.
struct UeLinks {
    std::vector<int> serving;      // 1 RU, or the dominant pair under Cooperation
    std::vector<int> interferers;
    std::vector<int> muted;        // Coordination: the second dominant, omitted entirely

    bool operator==(const UeLinks&) const = default;
};

/// One scheduling cell: a single RU (Baseline/Relay) or a pooled dominant-
/// pair cluster (Coordination/Cooperation) sharing one RB grid.
struct Cell {
    std::vector<int> ru_ids;       // sorted
    std::vector<int> ue_indices;   // sorted

    bool operator==(const Cell&) const = default;
};

struct AssociationMap {
    std::vector<UeLinks> ues;
    std::vector<Cell> cells;

    bool operator==(const AssociationMap&) const = default;
};

/// Serving/interferer/muted sets per UE plus the scheduling cells.
///
/// Baseline/Relay: strongest visible RU serves (ties to the lower id), the
/// rest interfere; one cell per serving RU. Coordination: the strongest of
/// the per-UE dominant pair serves, the second is muted toward that UE on
/// all RBs; pairs pool into one scheduling cell. Cooperation: the dominant
/// pair serves jointly (non-coherent power combining) and pools into one
/// cell. Overlapping pairs merge into a single cluster.
AssociationMap associate(std::span<const double> ue_positions_m,
                         std::span<const RadioUnit> rus, const TrackLayout& layout,
                         const PathlossParams& p, const AntennaPattern& pat,
                         double penetration_db, SchemeKind scheme);

/// Attached-UE count per cell, ordered as map.cells.
std::vector<int> per_cell_load(const AssociationMap& map);

}  // namespace hstsim
