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

namespace hstsim {

/// Exponentially averaged per-UE throughput, shared across cells (each UE
/// belongs to exactly one cell).
struct PfState {
    std::vector<double> avg_rate_bps;
    double beta = 1.0 / 1000.0;
    double epsilon_bps = 1.0;  // cold-start floor for the metric denominator

    static PfState init(int n_ues, double beta = 1.0 / 1000.0, double epsilon_bps = 1.0);
};

/// Achievable rates for one TTI, n_ues x n_rb row-major, bit/s.
struct RateGrid {
    int n_ues = 0;
    int n_rb = 0;
    std::vector<double> rate_bps;

    RateGrid() = default;
    RateGrid(int ues, int rbs) : n_ues(ues), n_rb(rbs), rate_bps(static_cast<std::size_t>(ues) * rbs, 0.0) {}
    double at(int ue, int rb) const { return rate_bps[static_cast<std::size_t>(ue) * n_rb + rb]; }
    double& at(int ue, int rb) { return rate_bps[static_cast<std::size_t>(ue) * n_rb + rb]; }
};

/// Proportional fair over one cell's RB grid: per RB, the attached UE
/// maximizing rate / max(avg, epsilon) wins; ties go to the lowest UE index.
/// The average is held fixed within the TTI. rb_to_ue is filled with global
/// UE indices, or -1 throughout when cell_ues is empty (the cell idles).
void pf_schedule(std::span<const int> cell_ues, const RateGrid& rates, const PfState& state,
                 std::span<int> rb_to_ue);

/// avg <- (1 - beta) avg + beta achieved, for every UE.
void update_pf_state(PfState& state, std::span<const double> achieved_bps);

}  // namespace hstsim
