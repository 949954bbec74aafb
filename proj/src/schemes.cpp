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

#include "hstsim/schemes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hstsim/phy.hpp"

namespace hstsim {

std::string to_string(SchemeKind scheme) {
    switch (scheme) {
        case SchemeKind::Baseline: return "baseline";
        case SchemeKind::Coordination: return "coordination";
        case SchemeKind::Cooperation: return "cooperation";
        case SchemeKind::Relay: return "relay";
    }
    return "unknown";
}

std::optional<SchemeKind> scheme_from_string(std::string_view name) {
    if (name == "baseline") return SchemeKind::Baseline;
    if (name == "coordination") return SchemeKind::Coordination;
    if (name == "cooperation") return SchemeKind::Cooperation;
    if (name == "relay") return SchemeKind::Relay;
    return std::nullopt;
}

std::vector<int> visible_rus(double ue_pos_m, std::span<const RadioUnit> rus,
                             const TrackLayout& layout) {
    std::vector<int> visible;
    for (const RadioUnit& ru : rus) {
        if (link_geometry(ue_pos_m, ru, layout).boresight_angle_deg <= 90.0)
            visible.push_back(ru.id);
    }
    if (visible.empty())
        throw std::runtime_error("visible_rus: no RU covers track position " +
                                 std::to_string(ue_pos_m));
    std::sort(visible.begin(), visible.end());
    return visible;
}

double wideband_rx_power_dbm(double ue_pos_m, const RadioUnit& ru, const TrackLayout& layout,
                             const PathlossParams& p, const AntennaPattern& pat,
                             double penetration_db) {
    return watts_to_dbm(ru.tx_power_w) +
           macro_gain_db(ue_pos_m, ru, layout, p, pat, penetration_db);
}

namespace {

// union-find over RU ids, used to merge overlapping dominant pairs
class RuClusters {
  public:
    int find(int ru) {
        auto it = parent_.try_emplace(ru, ru).first;
        if (it->second != ru) it->second = find(it->second);
        return it->second;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

  private:
    std::map<int, int> parent_;
};

const RadioUnit& ru_by_id(std::span<const RadioUnit> rus, int id) {
    for (const RadioUnit& ru : rus)
        if (ru.id == id) return ru;
    throw std::logic_error("ru_by_id: unknown RU id");
}

}  // namespace

AssociationMap associate(std::span<const double> ue_positions_m,
                         std::span<const RadioUnit> rus, const TrackLayout& layout,
                         const PathlossParams& p, const AntennaPattern& pat,
                         double penetration_db, SchemeKind scheme) {
    const int n_ues = static_cast<int>(ue_positions_m.size());
    AssociationMap map;
    map.ues.resize(static_cast<std::size_t>(n_ues));

    const bool paired =
        scheme == SchemeKind::Coordination || scheme == SchemeKind::Cooperation;

    std::vector<std::pair<int, int>> dominant_pairs(static_cast<std::size_t>(n_ues),
                                                    {-1, -1});
    RuClusters clusters;

    for (int u = 0; u < n_ues; ++u) {
        const std::vector<int> visible = visible_rus(ue_positions_m[u], rus, layout);

        // strongest-first, ties to the lower id (visible is id-sorted)
        std::vector<int> order = visible;
        std::vector<double> power(visible.size());
        for (std::size_t i = 0; i < visible.size(); ++i)
            power[i] = wideband_rx_power_dbm(ue_positions_m[u], ru_by_id(rus, visible[i]),
                                             layout, p, pat, penetration_db);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            const auto ia = std::find(visible.begin(), visible.end(), a) - visible.begin();
            const auto ib = std::find(visible.begin(), visible.end(), b) - visible.begin();
            return power[static_cast<std::size_t>(ia)] > power[static_cast<std::size_t>(ib)];
        });

        UeLinks& links = map.ues[static_cast<std::size_t>(u)];
        const int strongest = order[0];
        const int second = order.size() > 1 ? order[1] : -1;

        switch (scheme) {
            case SchemeKind::Baseline:
            case SchemeKind::Relay:
                links.serving = {strongest};
                links.interferers.assign(order.begin() + 1, order.end());
                break;
            case SchemeKind::Coordination:
                links.serving = {strongest};
                if (second >= 0) links.muted = {second};
                if (order.size() > 2) links.interferers.assign(order.begin() + 2, order.end());
                break;
            case SchemeKind::Cooperation:
                links.serving = {strongest};
                if (second >= 0) links.serving.push_back(second);
                if (order.size() > 2) links.interferers.assign(order.begin() + 2, order.end());
                break;
        }
        std::sort(links.serving.begin(), links.serving.end());
        std::sort(links.interferers.begin(), links.interferers.end());

        dominant_pairs[static_cast<std::size_t>(u)] = {strongest, second};
        if (paired) {
            clusters.find(strongest);
            if (second >= 0) clusters.unite(strongest, second);
        }
    }

    // scheduling cells: cluster root (paired schemes) or serving RU
    std::map<int, Cell> cells;
    for (int u = 0; u < n_ues; ++u) {
        const auto [strongest, second] = dominant_pairs[static_cast<std::size_t>(u)];
        const int key = paired ? clusters.find(strongest) : strongest;
        Cell& cell = cells[key];
        cell.ue_indices.push_back(u);
        for (int ru : {strongest, second}) {
            if (ru < 0) continue;
            if (!paired && ru != strongest) continue;
            if (std::find(cell.ru_ids.begin(), cell.ru_ids.end(), ru) == cell.ru_ids.end())
                cell.ru_ids.push_back(ru);
        }
    }
    for (auto& [key, cell] : cells) {
        std::sort(cell.ru_ids.begin(), cell.ru_ids.end());
        std::sort(cell.ue_indices.begin(), cell.ue_indices.end());
        map.cells.push_back(std::move(cell));
    }
    return map;
}

std::vector<int> per_cell_load(const AssociationMap& map) {
    std::vector<int> load;
    load.reserve(map.cells.size());
    for (const Cell& cell : map.cells)
        load.push_back(static_cast<int>(cell.ue_indices.size()));
    return load;
}

}  // namespace hstsim
