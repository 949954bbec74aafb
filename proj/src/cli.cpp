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

#include "hstsim/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hstsim/config.hpp"
#include "hstsim/mobility.hpp"

namespace hstsim {

namespace {

// decimal notation, >= 6 significant digits
std::string fmt(double x) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    if (std::strchr(buf, 'e') == nullptr) return buf;
    const double ax = std::fabs(x);
    if (ax < 1.0) {
        const int leading = static_cast<int>(-std::floor(std::log10(ax)));
        std::snprintf(buf, sizeof buf, "%.*f", leading + 8, x);
    } else {
        std::snprintf(buf, sizeof buf, "%.0f", x);
    }
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "scheme,position_m,mean_mbps,ci95_mbps,n_drops,per_ue_mean_mbps\n";
    for (const SweepRow& row : result.rows) {
        out << to_string(row.scheme) << ',' << fmt(row.position_rel_m) << ','
            << fmt(row.mean_mbps) << ',' << fmt(row.ci95_mbps) << ',' << row.n_drops << ','
            << fmt(row.per_ue_mean_mbps) << '\n';
    }
    return out.str();
}

std::string mobility_csv(const ScenarioConfig& cfg) {
    std::ostringstream out;
    out << "mode,cell_length_m,speed_kmh,handover_period_s,total_per_ue_handovers,blocked_ues\n";
    const double speed_mps = cfg.mobility_speed_kmh / 3.6;
    const struct {
        const char* name;
        double cell_length_m;
        MobilityMode mode;
    } modes[] = {
        {"per_ue", cfg.mobility_cell_length_m, MobilityMode::PerUe},
        {"moving_cell", cfg.moving_cell_length_m, MobilityMode::MovingCell},
    };
    for (const auto& m : modes) {
        const CellPlan plan = CellPlan::uniform(m.cell_length_m, cfg.mobility_trajectory_length_m);
        const Trajectory traj{0.0, speed_mps, cfg.mobility_trajectory_length_m / speed_mps};
        const auto events = handover_trace(traj, plan, cfg.n_passengers, m.mode);
        const double period = handover_period_s(m.cell_length_m, speed_mps);
        const long blocked =
            signaling_blocking(events, SignalingModel{cfg.signaling_capacity_per_s}, period);
        out << m.name << ',' << fmt(m.cell_length_m) << ',' << fmt(cfg.mobility_speed_kmh) << ','
            << fmt(period) << ',' << total_per_ue_handovers(events) << ',' << blocked << '\n';
    }
    return out.str();
}

std::string run_manifest(const ScenarioConfig& cfg, const std::string& csv_path) {
    const std::time_t now = std::time(nullptr);
    char stamp[32] = "unknown";
    if (std::tm tm_utc{}; gmtime_r(&now, &tm_utc) != nullptr)
        std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    std::ostringstream out;
    out << "# hst-sim run manifest\n";
    out << "# version: " << kToolVersion << '\n';
    out << "# created_utc: " << stamp << '\n';
    out << "# output_csv: " << csv_path << '\n';
    out << "# reproduce with: hst-sim --config <this file> --out <csv>\n";
    out << serialize_config(cfg);
    return out.str();
}

std::string sweep_svg(const SweepResult& result) {
    constexpr int kWidth = 820;
    constexpr int kHeight = 520;
    constexpr int kLeft = 70;
    constexpr int kRight = 30;
    constexpr int kTop = 30;
    constexpr int kBottom = 60;
    const int plot_w = kWidth - kLeft - kRight;
    const int plot_h = kHeight - kTop - kBottom;

    double x_min = 0.0;
    double x_max = 1.0;
    double y_max = 1.0;
    if (!result.rows.empty()) {
        x_min = x_max = result.rows.front().position_rel_m;
        y_max = 0.0;
        for (const SweepRow& row : result.rows) {
            x_min = std::min(x_min, row.position_rel_m);
            x_max = std::max(x_max, row.position_rel_m);
            y_max = std::max(y_max, row.mean_mbps + row.ci95_mbps);
        }
        if (x_max == x_min) x_max = x_min + 1.0;
        if (y_max <= 0.0) y_max = 1.0;
        y_max *= 1.05;
    }
    const auto sx = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    const auto sy = [&](double y) { return kTop + plot_h - y / y_max * plot_h; };

    const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728"};

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"#333\"/>\n";

    // axis ticks and labels
    for (int i = 0; i <= 5; ++i) {
        const double xv = x_min + (x_max - x_min) * i / 5.0;
        const double yv = y_max * i / 5.0;
        svg << "<line x1=\"" << sx(xv) << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << sx(xv)
            << "\" y2=\"" << kTop + plot_h + 5 << "\" stroke=\"#333\"/>\n";
        svg << "<text x=\"" << sx(xv) << "\" y=\"" << kTop + plot_h + 20
            << "\" font-size=\"12\" text-anchor=\"middle\">" << fmt(xv) << "</text>\n";
        svg << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << sy(yv) << "\" x2=\"" << kLeft
            << "\" y2=\"" << sy(yv) << "\" stroke=\"#333\"/>\n";
        svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << sy(yv) + 4
            << "\" font-size=\"12\" text-anchor=\"end\">" << fmt(yv) << "</text>\n";
    }
    svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
        << "\" font-size=\"14\" text-anchor=\"middle\">train center position [m]</text>\n";
    svg << "<text x=\"18\" y=\"" << kTop + plot_h / 2
        << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << kTop + plot_h / 2 << ")\">train throughput [Mbit/s]</text>\n";

    // one polyline + CI bars + markers per scheme, in row order
    std::vector<SchemeKind> seen;
    for (const SweepRow& row : result.rows)
        if (std::find(seen.begin(), seen.end(), row.scheme) == seen.end())
            seen.push_back(row.scheme);
    int legend_y = kTop + 16;
    for (const SchemeKind scheme : seen) {
        const char* color = colors[scheme_index(scheme) % 4];
        std::ostringstream points;
        for (const SweepRow& row : result.rows) {
            if (row.scheme != scheme) continue;
            points << sx(row.position_rel_m) << ',' << sy(row.mean_mbps) << ' ';
            svg << "<line x1=\"" << sx(row.position_rel_m) << "\" y1=\""
                << sy(row.mean_mbps - row.ci95_mbps) << "\" x2=\"" << sx(row.position_rel_m)
                << "\" y2=\"" << sy(row.mean_mbps + row.ci95_mbps) << "\" stroke=\"" << color
                << "\"/>\n";
            svg << "<circle cx=\"" << sx(row.position_rel_m) << "\" cy=\"" << sy(row.mean_mbps)
                << "\" r=\"3\" fill=\"none\" stroke=\"" << color << "\"/>\n";
        }
        svg << "<polyline points=\"" << points.str() << "\" fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\"/>\n";
        svg << "<rect x=\"" << kLeft + 12 << "\" y=\"" << legend_y - 9
            << "\" width=\"18\" height=\"4\" fill=\"" << color << "\"/>\n";
        svg << "<text x=\"" << kLeft + 36 << "\" y=\"" << legend_y << "\" font-size=\"13\">"
            << to_string(scheme) << "</text>\n";
        legend_y += 18;
    }
    svg << "</svg>\n";
    return svg.str();
}

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"system-level downlink simulator for track-side cellular service to trains"};
    app.set_version_flag("--version", kToolVersion);

    std::string config_path;
    std::string scheme;
    std::string positions;
    int drops = -1;
    std::int64_t seed = -1;
    int threads = 0;
    double penetration_db = -1.0;
    std::string out_path;
    std::string mobility_out_path;
    std::string plot_path;

    app.add_option("--config", config_path, "key=value configuration file");
    app.add_option("--scheme", scheme, "baseline|coordination|cooperation|relay|all");
    app.add_option("--positions", positions, "START:STEP:STOP, meters within the sweep span");
    app.add_option("--drops", drops, "drops per (scheme, position)")->check(CLI::Range(2, 100000));
    app.add_option("--seed", seed, "master seed")->check(CLI::NonNegativeNumber);
    app.add_option("--out", out_path, "throughput CSV path (default: stdout)");
    app.add_option("--mobility-out", mobility_out_path, "handover/mobility CSV path");
    app.add_option("--plot", plot_path, "SVG line plot path");
    app.add_option("--penetration-db", penetration_db, "carriage penetration loss override, dB");
    app.add_option("--threads", threads, "worker threads (0 = hardware)")
        ->check(CLI::Range(0, 1024));

    // CLI11 wants argv order reversed
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        ScenarioConfig cfg;
        if (!config_path.empty()) cfg = parse_config(config_path);
        if (!scheme.empty()) cfg.scheme = scheme;
        if (!positions.empty()) cfg.positions = positions;
        if (drops >= 0) cfg.drops_per_point = drops;
        if (seed >= 0) cfg.master_seed = static_cast<std::uint64_t>(seed);
        if (penetration_db >= 0.0) cfg.penetration_db = penetration_db;
        validate(cfg);

        const SweepResult result = sweep(cfg, threads);
        const std::string csv = sweep_csv(result);
        if (out_path.empty()) {
            std::cout << csv;
        } else {
            write_file(out_path, csv);
            write_file(out_path + ".manifest", run_manifest(cfg, out_path));
        }
        if (!mobility_out_path.empty()) write_file(mobility_out_path, mobility_csv(cfg));
        if (!plot_path.empty()) write_file(plot_path, sweep_svg(result));
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace hstsim
