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

#include "hstsim/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hstsim {

namespace {
// slack for boundary hits at the exact end of a trajectory
constexpr double kPositionEpsM = 1e-6;
}

CellPlan CellPlan::uniform(double cell_length_m, double track_length_m) {
    if (cell_length_m <= 0.0) throw std::invalid_argument("CellPlan: cell length must be > 0");
    if (track_length_m < 0.0) throw std::invalid_argument("CellPlan: track length must be >= 0");
    CellPlan plan;
    plan.cell_length_m = cell_length_m;
    for (double b = cell_length_m; b <= track_length_m + kPositionEpsM; b += cell_length_m)
        plan.boundaries_m.push_back(b);
    return plan;
}

double handover_period_s(double cell_length_m, double speed_mps) {
    if (cell_length_m <= 0.0) throw std::invalid_argument("handover_period_s: cell length must be > 0");
    if (speed_mps < 0.0) throw std::invalid_argument("handover_period_s: negative speed");
    if (speed_mps == 0.0) return std::numeric_limits<double>::infinity();
    return cell_length_m / speed_mps;
}

std::vector<HandoverEvent> handover_trace(const Trajectory& traj, const CellPlan& plan,
                                          int n_ues, MobilityMode mode) {
    if (n_ues < 0) throw std::invalid_argument("handover_trace: negative UE count");
    std::vector<HandoverEvent> events;
    if (traj.speed_mps <= 0.0 || traj.duration_s <= 0.0) return events;

    const double end_m = traj.start_m + traj.speed_mps * traj.duration_s;
    for (double b : plan.boundaries_m) {
        if (b <= traj.start_m || b > end_m + kPositionEpsM) continue;
        HandoverEvent ev;
        ev.time_s = (b - traj.start_m) / traj.speed_mps;
        ev.boundary_m = b;
        ev.ue_count = mode == MobilityMode::PerUe ? n_ues : 0;
        ev.kind = mode == MobilityMode::PerUe ? HandoverKind::PerUeBurst
                                              : HandoverKind::MovingCellReroute;
        events.push_back(ev);
    }
    std::sort(events.begin(), events.end(),
              [](const HandoverEvent& a, const HandoverEvent& b) { return a.time_s < b.time_s; });
    return events;
}

long total_per_ue_handovers(std::span<const HandoverEvent> events) {
    long total = 0;
    for (const HandoverEvent& ev : events)
        if (ev.kind == HandoverKind::PerUeBurst) total += ev.ue_count;
    return total;
}

int moving_cell_active_ru(double train_center_m, std::span<const RadioUnit> rus,
                          const TrackLayout& layout) {
    const auto& sites = layout.site_positions_m;
    if (sites.empty()) throw std::runtime_error("moving_cell_active_ru: no sites");
    if (train_center_m < sites.front() || train_center_m > sites.back())
        throw std::runtime_error("moving_cell_active_ru: train center " +
                                 std::to_string(train_center_m) + " outside covered range");

    // coverage intervals per RU, closed on both ends; scanning by ascending id
    // resolves shared endpoints to the lower id
    std::vector<int> ids;
    ids.reserve(rus.size());
    for (const RadioUnit& ru : rus) ids.push_back(ru.id);
    std::sort(ids.begin(), ids.end());

    for (int id : ids) {
        const RadioUnit* ru = nullptr;
        for (const RadioUnit& r : rus)
            if (r.id == id) ru = &r;
        const std::size_t site = static_cast<std::size_t>(ru->site_index);
        const double s = sites[site];
        double lo;
        double hi;
        if (ru->boresight < 0) {  // faces decreasing coordinates
            lo = site == 0 ? s : (sites[site - 1] + s) / 2.0;
            hi = s;
        } else {
            lo = s;
            hi = site + 1 >= sites.size() ? s : (s + sites[site + 1]) / 2.0;
        }
        if (train_center_m >= lo && train_center_m <= hi) return id;
    }
    throw std::logic_error("moving_cell_active_ru: coverage intervals left a gap");
}

long signaling_blocking(std::span<const HandoverEvent> events, const SignalingModel& model,
                        double window_s) {
    if (model.capacity_per_s <= 0.0)
        throw std::invalid_argument("signaling_blocking: capacity must be > 0");
    if (window_s < 0.0) throw std::invalid_argument("signaling_blocking: negative window");

    // whole handovers complete; floor fixes the fractional-completion convention
    const long completed_cap = static_cast<long>(std::floor(model.capacity_per_s * window_s + 1e-9));
    long blocked = 0;
    for (const HandoverEvent& ev : events) {
        const long completed = std::min<long>(ev.ue_count, completed_cap);
        blocked += ev.ue_count - completed;
    }
    return blocked;
}

}  // namespace hstsim
