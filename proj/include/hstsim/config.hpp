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

#include "hstsim/engine.hpp"

namespace hstsim {

/// Line-oriented key=value text, UTF-8, '#' comments. Unknown keys,
/// malformed values and out-of-range values raise ConfigError with the key
/// name and line number; missing keys keep their defaults.
ScenarioConfig parse_config_text(const std::string& text,
                                 const std::string& source_name = "<config>");

/// Like parse_config_text, reading from a file.
ScenarioConfig parse_config(const std::string& path);

/// Canonical key=value form; parse_config_text(serialize_config(c)) == c.
std::string serialize_config(const ScenarioConfig& cfg);

}  // namespace hstsim
