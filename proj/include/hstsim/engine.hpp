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

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hstsim/channel.hpp"
#include "hstsim/geometry.hpp"
#include "hstsim/phy.hpp"
#include "hstsim/schemes.hpp"

namespace hstsim {

/// Invalid or out-of-range configuration; the CLI maps this to exit code 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Full scenario parameter set. Field defaults are the reference
/// configuration; everything is overridable through the key=value config
/// file (see config.hpp) or CLI flags.
struct ScenarioConfig {
    // geometry
    int n_sites = 4;
    double inter_ru_distance_m = 1000.0;
    double site_lateral_offset_m = 5.0;
    double ru_height_m = 30.0;
    double ue_height_m = 1.5;
    double relay_antenna_height_m = 4.0;

    // train and users
    double train_length_m = 200.84;
    double train_speed_kmh = 200.0;
    int n_ues = 46;
    int n_passengers = 460;

    // channel
    double carrier_mhz = 2140.0;
    double min_distance_m = 35.0;
    double penetration_db = 30.0;
    double antenna_theta_3db_deg = 65.0;
    double antenna_front_to_back_db = 20.0;

    // phy
    double bandwidth_mhz = 20.0;
    int n_rb = 100;
    double rb_bandwidth_hz = 180e3;
    double tx_power_w = 40.0;  // per RU, split uniformly across RBs
    int n_tx_antennas = 2;
    double noise_psd_dbm_hz = -174.0;
    double noise_figure_db = 9.0;
    double se_alpha = 0.6;
    double se_max = 4.4;
    std::string interferer_precoding = "expected";  // expected | sampled

    // scheduler
    double pf_beta = 1.0 / 1000.0;
    double pf_epsilon_bps = 1.0;

    // engine
    int drops_per_point = 20;
    int ttis_per_drop = 200;
    std::string positions = "0:100:1000";  // relative to the sweep span, m
    std::string scheme = "baseline";       // baseline|coordination|cooperation|relay|all
    std::uint64_t master_seed = 1;

    // mobility
    double mobility_speed_kmh = 350.0;
    double mobility_cell_length_m = 1000.0;
    double moving_cell_length_m = 50000.0;
    double mobility_trajectory_length_m = 10000.0;
    double signaling_capacity_per_s = 100.0;

    bool operator==(const ScenarioConfig&) const = default;
};

/// Cross-field checks (RB grid within system bandwidth, positions inside the
/// sweep span, valid scheme names, ...). Throws ConfigError.
void validate(const ScenarioConfig& cfg);

TrackLayout layout_from(const ScenarioConfig& cfg);
std::vector<RadioUnit> radio_units_from(const ScenarioConfig& cfg);
PathlossParams pathloss_from(const ScenarioConfig& cfg);
AntennaPattern antenna_from(const ScenarioConfig& cfg);
LinkAbstraction link_abstraction_from(const ScenarioConfig& cfg);

/// Track coordinate where the sweep span starts (the left site of the
/// central inter-site span); relative positions are offsets from here.
double sweep_span_start_m(const ScenarioConfig& cfg);

/// Expands "start:step:stop" into a position list; stop is included when it
/// falls on the step grid.
std::vector<double> expand_positions(const std::string& positions);

/// Schemes selected by cfg.scheme; "all" means the three collaboration
/// schemes (relay runs only when named explicitly).
std::vector<SchemeKind> schemes_from_config(const ScenarioConfig& cfg);

/// Fixed global index per scheme, independent of the subset being run.
int scheme_index(SchemeKind scheme);

struct DropResult {
    double aggregate_mbps = 0.0;         // sum over UEs
    std::vector<double> per_ue_mbps;
    int n_cells = 0;
    std::uint64_t seed = 0;
};

/// One drop: UEs placed once, train quasi-static at the given relative
/// position, fading evolving over ttis_per_drop TTIs, association -> SINR ->
/// PF scheduling per TTI. Deterministic in (cfg, position, scheme, seed).
DropResult run_drop(const ScenarioConfig& cfg, double position_rel_m, SchemeKind scheme,
                    std::uint64_t drop_seed);

struct SweepRow {
    SchemeKind scheme = SchemeKind::Baseline;
    double position_rel_m = 0.0;
    double mean_mbps = 0.0;
    double ci95_mbps = 0.0;  // 1.96 s / sqrt(n)
    int n_drops = 0;
    double per_ue_mean_mbps = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;  // scheme-major, then position
};

/// Mean and normal-approximation 95 % confidence half-width.
std::pair<double, double> mean_ci95(std::span<const double> samples);

/// Runs drops_per_point drops per (scheme, position) with derived seeds.
/// n_threads = 0 picks the hardware concurrency; the result is identical
/// for any thread count.
SweepResult sweep(const ScenarioConfig& cfg, int n_threads = 0);

/// Collision-free mixing of (master, scheme, position, drop) into an RNG
/// seed; bijective in the packed indices for a fixed master.
std::uint64_t derive_seed(std::uint64_t master_seed, int scheme_index, int position_index,
                          int drop_index);

}  // namespace hstsim
