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

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hstsim/cli.hpp"
#include "hstsim/config.hpp"

using namespace hstsim;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "hstsim_test";
    std::filesystem::create_directories(dir);
    return dir;
}

// trimmed-down scenario so CLI round trips stay fast
std::string quick_config_text() {
    return "n_ues=8\nttis_per_drop=25\ndrops_per_point=2\npositions=0:500:1000\n";
}

}  // namespace

TEST_CASE("parse_config_text: empty input yields the default config") {
    CHECK(parse_config_text("") == ScenarioConfig{});
    CHECK(parse_config_text("\n# only a comment\n   \n") == ScenarioConfig{});
}

TEST_CASE("parse_config_text: single override keeps the other defaults") {
    const ScenarioConfig cfg = parse_config_text("penetration_db=10\n");
    ScenarioConfig expected;
    expected.penetration_db = 10.0;
    CHECK(cfg == expected);
}

TEST_CASE("parse_config_text: comments, whitespace and duplicate keys") {
    const ScenarioConfig cfg = parse_config_text(
        "  # full line comment\n"
        "penetration_db = 20   # trailing comment\n"
        "penetration_db=25\n");
    CHECK(cfg.penetration_db == 25.0);  // last assignment wins
}

TEST_CASE("parse_config_text: errors carry key and line number") {
    try {
        parse_config_text("n_ues=46\ntrain_speed_kmh=-5\n", "test.cfg");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("test.cfg:2") != std::string::npos);
        CHECK(msg.find("train_speed_kmh") != std::string::npos);
        CHECK(msg.find("range") != std::string::npos);
    }

    try {
        parse_config_text("no_such_key=1\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        CHECK(msg.find(":1") != std::string::npos);
        CHECK(msg.find("no_such_key") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_config_text("n_ues=abc\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("just a line\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("scheme=bogus\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("interferer_precoding=guess\n"), ConfigError);
}

TEST_CASE("config round trip: parse(serialize(cfg)) == cfg") {
    ScenarioConfig cfg;
    cfg.penetration_db = 17.3;
    cfg.train_speed_kmh = 1.0 / 3.0;  // not exactly representable in decimal
    cfg.se_alpha = 0.123456789012345;
    cfg.master_seed = 18446744073709551615ULL;
    cfg.scheme = "cooperation";
    cfg.positions = "0:250:1000";
    CHECK(parse_config_text(serialize_config(cfg)) == cfg);
}

TEST_CASE("parse_config: missing file") {
    CHECK_THROWS_AS(parse_config("/no/such/file.cfg"), ConfigError);
}

TEST_CASE("sweep_csv: exact header and row count") {
    ScenarioConfig cfg = parse_config_text(quick_config_text());
    cfg.scheme = "all";
    const std::string csv = sweep_csv(sweep(cfg, 2));
    std::istringstream lines(csv);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "scheme,position_m,mean_mbps,ci95_mbps,n_drops,per_ue_mean_mbps");
    int rows = 0;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 9);  // 3 schemes x 3 positions
}

TEST_CASE("mobility_csv: header and closed-form defaults") {
    const ScenarioConfig cfg;
    const std::string csv = mobility_csv(cfg);
    std::istringstream lines(csv);
    std::string header;
    std::string per_ue;
    std::string moving;
    REQUIRE(std::getline(lines, header));
    REQUIRE(std::getline(lines, per_ue));
    REQUIRE(std::getline(lines, moving));
    CHECK(header ==
          "mode,cell_length_m,speed_kmh,handover_period_s,total_per_ue_handovers,blocked_ues");
    CHECK(per_ue.find("per_ue,1000,350,10.2857143,4600,0") == 0);
    CHECK(moving.find("moving_cell,50000,350,514.285714,0,0") == 0);
}

TEST_CASE("run manifest: reproducible config with provenance comments") {
    ScenarioConfig cfg;
    cfg.master_seed = 99;
    const std::string manifest = run_manifest(cfg, "out.csv");
    CHECK(manifest.find("# hst-sim run manifest") == 0);
    CHECK(manifest.find(kToolVersion) != std::string::npos);
    CHECK(parse_config_text(manifest) == cfg);
}

TEST_CASE("run_cli: csv to stdout-less file runs are byte identical") {
    const auto dir = temp_dir();
    const auto cfg_path = dir / "quick.cfg";
    std::ofstream(cfg_path) << quick_config_text();

    const auto out_a = dir / "a.csv";
    const auto out_b = dir / "b.csv";
    const std::vector<std::string> base{"--config", cfg_path.string(), "--scheme", "all",
                                        "--seed",  "7"};
    auto args_a = base;
    args_a.insert(args_a.end(), {"--out", out_a.string()});
    auto args_b = base;
    args_b.insert(args_b.end(), {"--out", out_b.string()});
    REQUIRE(run_cli(args_a) == 0);
    REQUIRE(run_cli(args_b) == 0);
    CHECK(slurp(out_a) == slurp(out_b));
    CHECK(std::filesystem::exists(out_a.string() + ".manifest"));

    // manifest reproduces the run exactly
    const auto out_c = dir / "c.csv";
    REQUIRE(run_cli({"--config", (out_a.string() + ".manifest"), "--out", out_c.string()}) == 0);
    CHECK(slurp(out_a) == slurp(out_c));
}

TEST_CASE("run_cli: penetration override is monotone on matched seeds") {
    const auto dir = temp_dir();
    const auto cfg_path = dir / "pen.cfg";
    std::ofstream(cfg_path) << quick_config_text();
    const auto out_lo = dir / "lo.csv";
    const auto out_hi = dir / "hi.csv";
    REQUIRE(run_cli({"--config", cfg_path.string(), "--scheme", "baseline", "--seed", "3",
                     "--penetration-db", "10", "--out", out_lo.string()}) == 0);
    REQUIRE(run_cli({"--config", cfg_path.string(), "--scheme", "baseline", "--seed", "3",
                     "--penetration-db", "40", "--out", out_hi.string()}) == 0);

    std::istringstream lo(slurp(out_lo));
    std::istringstream hi(slurp(out_hi));
    std::string row_lo;
    std::string row_hi;
    std::getline(lo, row_lo);  // headers
    std::getline(hi, row_hi);
    while (std::getline(lo, row_lo) && std::getline(hi, row_hi)) {
        double mean_lo = 0.0;
        double mean_hi = 0.0;
        sscanf(row_lo.c_str(), "baseline,%*f,%lf", &mean_lo);
        sscanf(row_hi.c_str(), "baseline,%*f,%lf", &mean_hi);
        CHECK(mean_lo >= mean_hi);
    }
}

TEST_CASE("run_cli: exit codes") {
    const auto dir = temp_dir();
    // config error -> 1
    CHECK(run_cli({"--config", "/no/such/file.cfg"}) == 1);
    const auto bad_cfg = dir / "bad.cfg";
    std::ofstream(bad_cfg) << "train_speed_kmh=-5\n";
    CHECK(run_cli({"--config", bad_cfg.string()}) == 1);
    // unknown flag -> 1
    CHECK(run_cli({"--frobnicate"}) == 1);
    // unwritable output -> 2
    const auto quick = dir / "quick.cfg";
    std::ofstream(quick) << quick_config_text();
    CHECK(run_cli({"--config", quick.string(), "--out", "/no/such/dir/out.csv"}) == 2);
}

TEST_CASE("run_cli: svg and mobility outputs") {
    const auto dir = temp_dir();
    const auto quick = dir / "quick.cfg";
    std::ofstream(quick) << quick_config_text();
    const auto svg = dir / "plot.svg";
    const auto mob = dir / "mobility.csv";
    const auto csv = dir / "sweep.csv";
    REQUIRE(run_cli({"--config", quick.string(), "--scheme", "all", "--out", csv.string(),
                     "--plot", svg.string(), "--mobility-out", mob.string()}) == 0);
    const std::string svg_text = slurp(svg);
    CHECK(svg_text.rfind("<svg", 0) == 0);
    CHECK(svg_text.find("cooperation") != std::string::npos);
    CHECK(svg_text.find("</svg>") != std::string::npos);
    const std::string mob_text = slurp(mob);
    CHECK(mob_text.find("per_ue") != std::string::npos);
    CHECK(mob_text.find("moving_cell") != std::string::npos);
}
