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

#include "hstsim/scheduler.hpp"

#include <algorithm>
#include <stdexcept>

namespace hstsim {

PfState PfState::init(int n_ues, double beta, double epsilon_bps) {
    if (n_ues < 0) throw std::invalid_argument("PfState::init: negative UE count");
    if (beta <= 0.0 || beta > 1.0) throw std::invalid_argument("PfState::init: beta must be in (0, 1]");
    if (epsilon_bps <= 0.0) throw std::invalid_argument("PfState::init: epsilon must be > 0");
    PfState st;
    st.avg_rate_bps.assign(static_cast<std::size_t>(n_ues), epsilon_bps);
    st.beta = beta;
    st.epsilon_bps = epsilon_bps;
    return st;
}

void pf_schedule(std::span<const int> cell_ues, const RateGrid& rates, const PfState& state,
                 std::span<int> rb_to_ue) {
    if (cell_ues.empty()) {
        std::fill(rb_to_ue.begin(), rb_to_ue.end(), -1);
        return;
    }
    for (int rb = 0; rb < rates.n_rb; ++rb) {
        int best_ue = -1;
        double best_metric = -1.0;
        for (int u : cell_ues) {
            const double avg = std::max(state.avg_rate_bps[static_cast<std::size_t>(u)],
                                        state.epsilon_bps);
            const double metric = rates.at(u, rb) / avg;
            if (metric > best_metric) {
                best_metric = metric;
                best_ue = u;
            }
        }
        rb_to_ue[static_cast<std::size_t>(rb)] = best_ue;
    }
}

void update_pf_state(PfState& state, std::span<const double> achieved_bps) {
    for (std::size_t u = 0; u < state.avg_rate_bps.size(); ++u)
        state.avg_rate_bps[u] =
            (1.0 - state.beta) * state.avg_rate_bps[u] + state.beta * achieved_bps[u];
}

}  // namespace hstsim
