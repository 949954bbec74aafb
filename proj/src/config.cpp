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

#include "hstsim/config.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace hstsim {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const double x = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE)
        throw std::invalid_argument("not a number");
    return x;
}

long long parse_int(const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const long long x = std::strtoll(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE)
        throw std::invalid_argument("not an integer");
    return x;
}

std::uint64_t parse_uint64(const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long x = std::strtoull(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE ||
        value.find('-') != std::string::npos)
        throw std::invalid_argument("not an unsigned integer");
    return x;
}

using Setter = std::function<void(ScenarioConfig&, const std::string&)>;

// value parsing + per-key range checks; cross-field checks live in validate()
const std::map<std::string, Setter>& key_table() {
    static const std::map<std::string, Setter> table = [] {
        std::map<std::string, Setter> t;
        const auto num = [&t](const std::string& key, double ScenarioConfig::* field,
                              double min, bool exclusive, const char* what) {
            t[key] = [field, min, exclusive, what](ScenarioConfig& cfg, const std::string& v) {
                const double x = parse_double(v);
                if (exclusive ? x <= min : x < min)
                    throw std::out_of_range(std::string("value out of range (") + what + ")");
                cfg.*field = x;
            };
        };
        const auto integer = [&t](const std::string& key, int ScenarioConfig::* field,
                                  long long min, const char* what) {
            t[key] = [field, min, what](ScenarioConfig& cfg, const std::string& v) {
                const long long x = parse_int(v);
                if (x < min || x > 1'000'000'000)
                    throw std::out_of_range(std::string("value out of range (") + what + ")");
                cfg.*field = static_cast<int>(x);
            };
        };

        integer("n_sites", &ScenarioConfig::n_sites, 2, "must be >= 2");
        num("inter_ru_distance_m", &ScenarioConfig::inter_ru_distance_m, 0.0, true, "must be > 0");
        num("site_lateral_offset_m", &ScenarioConfig::site_lateral_offset_m, 0.0, false,
            "must be >= 0");
        num("ru_height_m", &ScenarioConfig::ru_height_m, 0.0, true, "must be > 0");
        num("ue_height_m", &ScenarioConfig::ue_height_m, 0.0, true, "must be > 0");
        num("relay_antenna_height_m", &ScenarioConfig::relay_antenna_height_m, 0.0, true,
            "must be > 0");
        num("train_length_m", &ScenarioConfig::train_length_m, 0.0, true, "must be > 0");
        num("train_speed_kmh", &ScenarioConfig::train_speed_kmh, 0.0, false, "must be >= 0");
        integer("n_ues", &ScenarioConfig::n_ues, 1, "must be >= 1");
        integer("n_passengers", &ScenarioConfig::n_passengers, 0, "must be >= 0");
        num("carrier_mhz", &ScenarioConfig::carrier_mhz, 0.0, true, "must be > 0");
        num("min_distance_m", &ScenarioConfig::min_distance_m, 0.0, true, "must be > 0");
        num("penetration_db", &ScenarioConfig::penetration_db, 0.0, false, "must be >= 0");
        num("antenna_theta_3db_deg", &ScenarioConfig::antenna_theta_3db_deg, 0.0, true,
            "must be > 0");
        num("antenna_front_to_back_db", &ScenarioConfig::antenna_front_to_back_db, 0.0, true,
            "must be > 0");
        num("bandwidth_mhz", &ScenarioConfig::bandwidth_mhz, 0.0, true, "must be > 0");
        integer("n_rb", &ScenarioConfig::n_rb, 1, "must be >= 1");
        num("rb_bandwidth_hz", &ScenarioConfig::rb_bandwidth_hz, 0.0, true, "must be > 0");
        num("tx_power_w", &ScenarioConfig::tx_power_w, 0.0, true, "must be > 0");
        integer("n_tx_antennas", &ScenarioConfig::n_tx_antennas, 1, "must be >= 1");
        t["noise_psd_dbm_hz"] = [](ScenarioConfig& cfg, const std::string& v) {
            cfg.noise_psd_dbm_hz = parse_double(v);
        };
        num("noise_figure_db", &ScenarioConfig::noise_figure_db, 0.0, false, "must be >= 0");
        t["se_alpha"] = [](ScenarioConfig& cfg, const std::string& v) {
            const double x = parse_double(v);
            if (x <= 0.0 || x > 1.0) throw std::out_of_range("value out of range (must be in (0, 1])");
            cfg.se_alpha = x;
        };
        num("se_max", &ScenarioConfig::se_max, 0.0, true, "must be > 0");
        t["interferer_precoding"] = [](ScenarioConfig& cfg, const std::string& v) {
            if (v != "expected" && v != "sampled")
                throw std::out_of_range("must be 'expected' or 'sampled'");
            cfg.interferer_precoding = v;
        };
        t["pf_beta"] = [](ScenarioConfig& cfg, const std::string& v) {
            const double x = parse_double(v);
            if (x <= 0.0 || x > 1.0) throw std::out_of_range("value out of range (must be in (0, 1])");
            cfg.pf_beta = x;
        };
        num("pf_epsilon_bps", &ScenarioConfig::pf_epsilon_bps, 0.0, true, "must be > 0");
        integer("drops_per_point", &ScenarioConfig::drops_per_point, 2, "must be >= 2");
        integer("ttis_per_drop", &ScenarioConfig::ttis_per_drop, 1, "must be >= 1");
        t["positions"] = [](ScenarioConfig& cfg, const std::string& v) {
            expand_positions(v);  // format check; span check happens in validate()
            cfg.positions = v;
        };
        t["scheme"] = [](ScenarioConfig& cfg, const std::string& v) {
            if (v != "all" && !scheme_from_string(v))
                throw std::out_of_range(
                    "must be baseline|coordination|cooperation|relay|all");
            cfg.scheme = v;
        };
        t["master_seed"] = [](ScenarioConfig& cfg, const std::string& v) {
            cfg.master_seed = parse_uint64(v);
        };
        num("mobility_speed_kmh", &ScenarioConfig::mobility_speed_kmh, 0.0, true, "must be > 0");
        num("mobility_cell_length_m", &ScenarioConfig::mobility_cell_length_m, 0.0, true,
            "must be > 0");
        t["moving_cell_length_m"] = [](ScenarioConfig& cfg, const std::string& v) {
            const double x = parse_double(v);
            if (x <= 0.0 || x > 50000.0)
                throw std::out_of_range("value out of range (must be in (0, 50000])");
            cfg.moving_cell_length_m = x;
        };
        num("mobility_trajectory_length_m", &ScenarioConfig::mobility_trajectory_length_m, 0.0,
            true, "must be > 0");
        num("signaling_capacity_per_s", &ScenarioConfig::signaling_capacity_per_s, 0.0, true,
            "must be > 0");
        return t;
    }();
    return table;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

ScenarioConfig parse_config_text(const std::string& text, const std::string& source_name) {
    ScenarioConfig cfg;
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto at = [&](const std::string& message) {
            return ConfigError(source_name + ":" + std::to_string(line_no) + ": " + message);
        };

        const auto eq = line.find('=');
        if (eq == std::string::npos) throw at("expected key=value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw at("empty key");

        const auto& table = key_table();
        const auto it = table.find(key);
        if (it == table.end()) throw at("unknown key '" + key + "'");
        try {
            it->second(cfg, value);
        } catch (const std::exception& e) {
            throw at(key + ": " + e.what() + " (got '" + value + "')");
        }
    }
    validate(cfg);
    return cfg;
}

ScenarioConfig parse_config(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_config_text(buffer.str(), path);
}

std::string serialize_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    out << "n_sites=" << cfg.n_sites << '\n';
    out << "inter_ru_distance_m=" << format_double(cfg.inter_ru_distance_m) << '\n';
    out << "site_lateral_offset_m=" << format_double(cfg.site_lateral_offset_m) << '\n';
    out << "ru_height_m=" << format_double(cfg.ru_height_m) << '\n';
    out << "ue_height_m=" << format_double(cfg.ue_height_m) << '\n';
    out << "relay_antenna_height_m=" << format_double(cfg.relay_antenna_height_m) << '\n';
    out << "train_length_m=" << format_double(cfg.train_length_m) << '\n';
    out << "train_speed_kmh=" << format_double(cfg.train_speed_kmh) << '\n';
    out << "n_ues=" << cfg.n_ues << '\n';
    out << "n_passengers=" << cfg.n_passengers << '\n';
    out << "carrier_mhz=" << format_double(cfg.carrier_mhz) << '\n';
    out << "min_distance_m=" << format_double(cfg.min_distance_m) << '\n';
    out << "penetration_db=" << format_double(cfg.penetration_db) << '\n';
    out << "antenna_theta_3db_deg=" << format_double(cfg.antenna_theta_3db_deg) << '\n';
    out << "antenna_front_to_back_db=" << format_double(cfg.antenna_front_to_back_db) << '\n';
    out << "bandwidth_mhz=" << format_double(cfg.bandwidth_mhz) << '\n';
    out << "n_rb=" << cfg.n_rb << '\n';
    out << "rb_bandwidth_hz=" << format_double(cfg.rb_bandwidth_hz) << '\n';
    out << "tx_power_w=" << format_double(cfg.tx_power_w) << '\n';
    out << "n_tx_antennas=" << cfg.n_tx_antennas << '\n';
    out << "noise_psd_dbm_hz=" << format_double(cfg.noise_psd_dbm_hz) << '\n';
    out << "noise_figure_db=" << format_double(cfg.noise_figure_db) << '\n';
    out << "se_alpha=" << format_double(cfg.se_alpha) << '\n';
    out << "se_max=" << format_double(cfg.se_max) << '\n';
    out << "interferer_precoding=" << cfg.interferer_precoding << '\n';
    out << "pf_beta=" << format_double(cfg.pf_beta) << '\n';
    out << "pf_epsilon_bps=" << format_double(cfg.pf_epsilon_bps) << '\n';
    out << "drops_per_point=" << cfg.drops_per_point << '\n';
    out << "ttis_per_drop=" << cfg.ttis_per_drop << '\n';
    out << "positions=" << cfg.positions << '\n';
    out << "scheme=" << cfg.scheme << '\n';
    out << "master_seed=" << cfg.master_seed << '\n';
    out << "mobility_speed_kmh=" << format_double(cfg.mobility_speed_kmh) << '\n';
    out << "mobility_cell_length_m=" << format_double(cfg.mobility_cell_length_m) << '\n';
    out << "moving_cell_length_m=" << format_double(cfg.moving_cell_length_m) << '\n';
    out << "mobility_trajectory_length_m=" << format_double(cfg.mobility_trajectory_length_m)
        << '\n';
    out << "signaling_capacity_per_s=" << format_double(cfg.signaling_capacity_per_s) << '\n';
    return out.str();
}

}  // namespace hstsim
