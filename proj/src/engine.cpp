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

#include "hstsim/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <deque>
#include <stdexcept>
#include <thread>

#include "hstsim/scheduler.hpp"

namespace hstsim {

TrackLayout layout_from(const ScenarioConfig& cfg) {
    return make_track_layout(cfg.n_sites, cfg.inter_ru_distance_m, cfg.site_lateral_offset_m,
                             cfg.ru_height_m, cfg.ue_height_m);
}

std::vector<RadioUnit> radio_units_from(const ScenarioConfig& cfg) {
    return make_radio_units(layout_from(cfg), cfg.tx_power_w, cfg.n_tx_antennas);
}

PathlossParams pathloss_from(const ScenarioConfig& cfg) {
    return PathlossParams{cfg.carrier_mhz, cfg.ru_height_m, cfg.min_distance_m};
}

AntennaPattern antenna_from(const ScenarioConfig& cfg) {
    return AntennaPattern{cfg.antenna_theta_3db_deg, cfg.antenna_front_to_back_db};
}

LinkAbstraction link_abstraction_from(const ScenarioConfig& cfg) {
    return LinkAbstraction{cfg.se_alpha, cfg.se_max, cfg.rb_bandwidth_hz, cfg.n_rb};
}

double sweep_span_start_m(const ScenarioConfig& cfg) {
    // central inter-site span, so swept positions have neighbors on both sides
    const int span_index = (cfg.n_sites - 1) / 2;
    return span_index * cfg.inter_ru_distance_m;
}

std::vector<double> expand_positions(const std::string& positions) {
    double start = 0.0;
    double step = 0.0;
    double stop = 0.0;
    char extra = '\0';
    if (std::sscanf(positions.c_str(), "%lf:%lf:%lf%c", &start, &step, &stop, &extra) != 3)
        throw ConfigError("positions: expected START:STEP:STOP, got '" + positions + "'");
    if (step <= 0.0) throw ConfigError("positions: STEP must be > 0");
    if (stop < start) throw ConfigError("positions: STOP must be >= START");
    std::vector<double> out;
    for (double p = start; p <= stop + 1e-9; p += step) out.push_back(std::min(p, stop));
    return out;
}

std::vector<SchemeKind> schemes_from_config(const ScenarioConfig& cfg) {
    if (cfg.scheme == "all")
        return {SchemeKind::Baseline, SchemeKind::Coordination, SchemeKind::Cooperation};
    const auto scheme = scheme_from_string(cfg.scheme);
    if (!scheme) throw ConfigError("scheme: unknown value '" + cfg.scheme + "'");
    return {*scheme};
}

int scheme_index(SchemeKind scheme) {
    switch (scheme) {
        case SchemeKind::Baseline: return 0;
        case SchemeKind::Coordination: return 1;
        case SchemeKind::Cooperation: return 2;
        case SchemeKind::Relay: return 3;
    }
    return -1;
}

void validate(const ScenarioConfig& cfg) {
    const auto fail = [](const std::string& message) { throw ConfigError(message); };
    if (cfg.n_sites < 2) fail("n_sites: must be >= 2");
    if (cfg.n_tx_antennas != 2) fail("n_tx_antennas: the two-port codebook requires exactly 2");
    if (cfg.n_rb * cfg.rb_bandwidth_hz > cfg.bandwidth_mhz * 1e6 + 1e-6)
        fail("n_rb: RB grid exceeds the system bandwidth");
    if (cfg.drops_per_point < 2) fail("drops_per_point: must be >= 2 for confidence intervals");
    if (cfg.ttis_per_drop < 1) fail("ttis_per_drop: must be >= 1");
    if (cfg.interferer_precoding != "expected" && cfg.interferer_precoding != "sampled")
        fail("interferer_precoding: must be 'expected' or 'sampled'");
    schemes_from_config(cfg);
    for (double p : expand_positions(cfg.positions)) {
        if (p < 0.0 || p > cfg.inter_ru_distance_m)
            fail("positions: " + std::to_string(p) + " m outside the sweep span [0, " +
                 std::to_string(cfg.inter_ru_distance_m) + "]");
    }
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

// per-(UE, RU) link state for one drop
struct DropLink {
    int ru_id = 0;
    bool serving = false;
    double rx_factor_mw = 0.0;  // per-RB tx power x linear macro gain
    const FadingProcess* fading = nullptr;
    // per antenna, per RB coefficients for the current TTI
    std::vector<std::complex<double>> h0;
    std::vector<std::complex<double>> h1;
};

}  // namespace

std::uint64_t derive_seed(std::uint64_t master_seed, int scheme_index, int position_index,
                          int drop_index) {
    if (scheme_index < 0 || position_index < 0 || drop_index < 0 ||
        scheme_index >= (1 << 21) || position_index >= (1 << 21) || drop_index >= (1 << 21))
        throw std::invalid_argument("derive_seed: index out of range");
    const std::uint64_t pack = (static_cast<std::uint64_t>(scheme_index) << 42) |
                               (static_cast<std::uint64_t>(position_index) << 21) |
                               static_cast<std::uint64_t>(drop_index);
    return splitmix64(splitmix64(master_seed + 0x9e3779b97f4a7c15ULL) ^ pack);
}

DropResult run_drop(const ScenarioConfig& cfg, double position_rel_m, SchemeKind scheme,
                    std::uint64_t drop_seed) {
    if (position_rel_m < 0.0 || position_rel_m > cfg.inter_ru_distance_m)
        throw std::runtime_error("run_drop: position " + std::to_string(position_rel_m) +
                                 " m outside the covered span");

    const bool relay = scheme == SchemeKind::Relay;
    TrackLayout layout = layout_from(cfg);
    if (relay) layout.ue_height_m = cfg.relay_antenna_height_m;  // roof antenna
    const std::vector<RadioUnit> rus = radio_units_from(cfg);
    const PathlossParams plp = pathloss_from(cfg);
    const AntennaPattern pattern = antenna_from(cfg);
    const LinkAbstraction la = link_abstraction_from(cfg);
    const double penetration_db = relay ? 0.0 : cfg.penetration_db;
    const double center_m = sweep_span_start_m(cfg) + position_rel_m;

    std::mt19937_64 rng(drop_seed);

    TrainState train{cfg.train_length_m, cfg.train_speed_kmh / 3.6, center_m};
    std::vector<double> ue_positions;
    if (relay) {
        ue_positions = {center_m};
    } else {
        const UeSet ues = place_ues(cfg.n_ues, cfg.train_length_m, rng);
        ue_positions = ue_track_positions(train, ues);
    }
    const int n_ues = static_cast<int>(ue_positions.size());

    const AssociationMap assoc = associate(ue_positions, rus, layout, plp, pattern,
                                           penetration_db, scheme);

    const FadingProfile profile;
    const RbProjection proj(profile, cfg.n_rb, cfg.rb_bandwidth_hz);
    const double fd = doppler_hz(train.speed_mps, cfg.carrier_mhz * 1e6);
    const double p_rb_mw = cfg.tx_power_w * 1000.0 / cfg.n_rb;
    const double noise_mw =
        dbm_to_mw(noise_power_dbm(cfg.noise_psd_dbm_hz, cfg.rb_bandwidth_hz, cfg.noise_figure_db));
    const InterfererPrecoding ip_mode = cfg.interferer_precoding == "sampled"
                                            ? InterfererPrecoding::Sampled
                                            : InterfererPrecoding::Expected;

    // one fading process per (UE, visible RU), constructed in a fixed order
    // so the realization depends only on the drop seed
    std::vector<std::vector<DropLink>> links(static_cast<std::size_t>(n_ues));
    std::deque<FadingProcess> processes;  // deque: stable element addresses
    for (int u = 0; u < n_ues; ++u) {
        const UeLinks& roles = assoc.ues[static_cast<std::size_t>(u)];
        std::vector<int> relevant = roles.serving;
        relevant.insert(relevant.end(), roles.interferers.begin(), roles.interferers.end());
        std::sort(relevant.begin(), relevant.end());
        for (int ru_id : relevant) {
            const RadioUnit& ru = rus[static_cast<std::size_t>(ru_id)];
            DropLink link;
            link.ru_id = ru_id;
            link.serving = std::find(roles.serving.begin(), roles.serving.end(), ru_id) !=
                           roles.serving.end();
            link.rx_factor_mw =
                p_rb_mw * db_to_linear(macro_gain_db(ue_positions[static_cast<std::size_t>(u)],
                                                     ru, layout, plp, pattern, penetration_db));
            processes.emplace_back(profile.n_taps(), cfg.n_tx_antennas, fd, rng);
            link.fading = &processes.back();
            link.h0.resize(static_cast<std::size_t>(cfg.n_rb));
            link.h1.resize(static_cast<std::size_t>(cfg.n_rb));
            links[static_cast<std::size_t>(u)].push_back(std::move(link));
        }
    }

    PfState pf = PfState::init(n_ues, cfg.pf_beta, cfg.pf_epsilon_bps);
    RateGrid rates(n_ues, cfg.n_rb);
    std::vector<double> achieved_bps(static_cast<std::size_t>(n_ues));
    std::vector<double> bits(static_cast<std::size_t>(n_ues), 0.0);
    std::vector<int> rb_to_ue(static_cast<std::size_t>(cfg.n_rb));
    std::vector<LinkSignal> serving_signals;
    std::vector<LinkSignal> interferer_signals;

    for (int tti = 0; tti < cfg.ttis_per_drop; ++tti) {
        for (int u = 0; u < n_ues; ++u) {
            for (DropLink& link : links[static_cast<std::size_t>(u)]) {
                link.fading->sample_row(tti, 0, proj, link.h0);
                link.fading->sample_row(tti, 1, proj, link.h1);
            }
            for (int rb = 0; rb < cfg.n_rb; ++rb) {
                serving_signals.clear();
                interferer_signals.clear();
                for (const DropLink& link : links[static_cast<std::size_t>(u)]) {
                    const LinkSignal sig{link.rx_factor_mw,
                                         link.h0[static_cast<std::size_t>(rb)],
                                         link.h1[static_cast<std::size_t>(rb)]};
                    (link.serving ? serving_signals : interferer_signals).push_back(sig);
                }
                const double sinr =
                    sinr_linear(serving_signals, interferer_signals, noise_mw, ip_mode, &rng);
                rates.at(u, rb) = rb_rate_bps(spectral_efficiency(sinr, la), la);
            }
        }

        std::fill(achieved_bps.begin(), achieved_bps.end(), 0.0);
        for (const Cell& cell : assoc.cells) {
            pf_schedule(cell.ue_indices, rates, pf, rb_to_ue);
            for (int rb = 0; rb < cfg.n_rb; ++rb) {
                const int u = rb_to_ue[static_cast<std::size_t>(rb)];
                if (u >= 0) achieved_bps[static_cast<std::size_t>(u)] += rates.at(u, rb);
            }
        }
        update_pf_state(pf, achieved_bps);
        for (int u = 0; u < n_ues; ++u)
            bits[static_cast<std::size_t>(u)] += achieved_bps[static_cast<std::size_t>(u)] * kTtiSeconds;
    }

    DropResult result;
    result.seed = drop_seed;
    result.n_cells = static_cast<int>(assoc.cells.size());
    const double duration_s = cfg.ttis_per_drop * kTtiSeconds;
    result.per_ue_mbps.reserve(static_cast<std::size_t>(n_ues));
    for (int u = 0; u < n_ues; ++u) {
        const double mbps = bits[static_cast<std::size_t>(u)] / duration_s / 1e6;
        result.per_ue_mbps.push_back(mbps);
        result.aggregate_mbps += mbps;
    }
    return result;
}

std::pair<double, double> mean_ci95(std::span<const double> samples) {
    const int n = static_cast<int>(samples.size());
    if (n == 0) return {0.0, 0.0};
    double mean = 0.0;
    for (double x : samples) mean += x;
    mean /= n;
    if (n < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double x : samples) ss += (x - mean) * (x - mean);
    const double stddev = std::sqrt(ss / (n - 1));
    return {mean, 1.96 * stddev / std::sqrt(static_cast<double>(n))};
}

SweepResult sweep(const ScenarioConfig& cfg, int n_threads) {
    validate(cfg);
    const std::vector<SchemeKind> schemes = schemes_from_config(cfg);
    const std::vector<double> positions = expand_positions(cfg.positions);
    const int n_drops = cfg.drops_per_point;

    struct Task {
        int scheme_slot;
        int position_slot;
        int drop;
    };
    std::vector<Task> tasks;
    tasks.reserve(schemes.size() * positions.size() * static_cast<std::size_t>(n_drops));
    for (int s = 0; s < static_cast<int>(schemes.size()); ++s)
        for (int p = 0; p < static_cast<int>(positions.size()); ++p)
            for (int d = 0; d < n_drops; ++d) tasks.push_back({s, p, d});

    std::vector<double> aggregates(tasks.size());
    std::vector<double> per_ue_means(tasks.size());

    const auto run_task = [&](const Task& task, std::size_t slot) {
        const SchemeKind scheme = schemes[static_cast<std::size_t>(task.scheme_slot)];
        const std::uint64_t seed =
            derive_seed(cfg.master_seed, scheme_index(scheme), task.position_slot, task.drop);
        const DropResult drop =
            run_drop(cfg, positions[static_cast<std::size_t>(task.position_slot)], scheme, seed);
        aggregates[slot] = drop.aggregate_mbps;
        // per-UE average; for relay the virtual-UE rate is shared by all active UEs
        const int shared_by = scheme == SchemeKind::Relay ? cfg.n_ues
                                                          : static_cast<int>(drop.per_ue_mbps.size());
        per_ue_means[slot] = drop.aggregate_mbps / shared_by;
    };

    unsigned workers = n_threads > 0 ? static_cast<unsigned>(n_threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_task(tasks[i], i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                    run_task(tasks[i], i);
            });
        }
        for (std::thread& t : pool) t.join();
    }

    SweepResult result;
    std::size_t slot = 0;
    for (int s = 0; s < static_cast<int>(schemes.size()); ++s) {
        for (int p = 0; p < static_cast<int>(positions.size()); ++p) {
            const std::span<const double> agg(aggregates.data() + slot,
                                              static_cast<std::size_t>(n_drops));
            const std::span<const double> per_ue(per_ue_means.data() + slot,
                                                 static_cast<std::size_t>(n_drops));
            const auto [mean, ci] = mean_ci95(agg);
            SweepRow row;
            row.scheme = schemes[static_cast<std::size_t>(s)];
            row.position_rel_m = positions[static_cast<std::size_t>(p)];
            row.mean_mbps = mean;
            row.ci95_mbps = ci;
            row.n_drops = n_drops;
            row.per_ue_mean_mbps = mean_ci95(per_ue).first;
            result.rows.push_back(row);
            slot += static_cast<std::size_t>(n_drops);
        }
    }
    return result;
}

}  // namespace hstsim
