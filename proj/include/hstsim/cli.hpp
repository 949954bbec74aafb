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

#include <string>
#include <vector>

#include "hstsim/engine.hpp"

namespace hstsim {

inline constexpr const char* kToolVersion = "0.1.0";

/// Throughput results, header
/// scheme,position_m,mean_mbps,ci95_mbps,n_drops,per_ue_mean_mbps
std::string sweep_csv(const SweepResult& result);

/// Handover arithmetic for the per-UE and moving-cell modes, header
/// mode,cell_length_m,speed_kmh,handover_period_s,total_per_ue_handovers,blocked_ues
std::string mobility_csv(const ScenarioConfig& cfg);

/// Resolved configuration plus provenance comments; feeding the manifest
/// back through --config reproduces the run exactly.
std::string run_manifest(const ScenarioConfig& cfg, const std::string& csv_path);

/// Static line plot of mean +/- CI versus position, one series per scheme.
std::string sweep_svg(const SweepResult& result);

/// Entry point behind the hst-sim binary; args excludes argv[0].
/// Exit codes: 0 success, 1 configuration error, 2 runtime error.
int run_cli(const std::vector<std::string>& args);

}  // namespace hstsim
