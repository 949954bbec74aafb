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

#include <span>
#include <vector>

#include "hstsim/geometry.hpp"

namespace hstsim {

/// Cell borders along the track. Conventional cells are ~1 km; a moving cell
/// stretches the same plan to tens of km.
struct CellPlan {
    double cell_length_m = 1000.0;
    std::vector<double> boundaries_m;  // strictly increasing

    /// Boundaries at multiples of cell_length_m up to track_length_m.
    static CellPlan uniform(double cell_length_m, double track_length_m);
};

enum class HandoverKind { PerUeBurst, MovingCellReroute };

struct HandoverEvent {
    double time_s = 0.0;
    double boundary_m = 0.0;
    int ue_count = 0;  // every passenger signals in a per-UE burst; reroutes carry none
    HandoverKind kind = HandoverKind::PerUeBurst;
};

/// Deterministic control-channel capacity: handovers completed per second.
struct SignalingModel {
    double capacity_per_s = 100.0;
};

/// Train front position start_m at t = 0, constant speed.
struct Trajectory {
    double start_m = 0.0;
    double speed_mps = 350.0 / 3.6;
    double duration_s = 0.0;
};

enum class MobilityMode { PerUe, MovingCell };

/// cell_length / speed; +infinity for a stationary train.
double handover_period_s(double cell_length_m, double speed_mps);

/// One event per cell-boundary crossing of the train front, time-ordered.
/// PerUe events carry ue_count = n_ues; MovingCell reroutes carry 0.
std::vector<HandoverEvent> handover_trace(const Trajectory& traj, const CellPlan& plan,
                                          int n_ues, MobilityMode mode);

/// Sum of per-UE handover signals over a trace.
long total_per_ue_handovers(std::span<const HandoverEvent> events);

/// RU whose coverage interval (track split at sites and span midpoints)
/// contains the train center; boundary ties go to the lowest RU id.
/// Throws std::runtime_error outside [first site, last site].
int moving_cell_active_ru(double train_center_m, std::span<const RadioUnit> rus,
                          const TrackLayout& layout);

/// Per event, min(ue_count, floor(capacity x window)) handovers complete;
/// the remainder is blocked. Returns the total blocked count.
long signaling_blocking(std::span<const HandoverEvent> events, const SignalingModel& model,
                        double window_s);

}  // namespace hstsim
