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

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <span>

namespace hstsim {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts * 1000.0); }
inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

/// Rank-1 two-port codebook: (1,1), (1,-1), (1,j), (1,-j), each / sqrt(2).
inline constexpr int kCodebookSize = 4;
std::array<std::complex<double>, 2> codebook_entry(int index);

/// Truncated-Shannon mapping constants and the RB grid.
struct LinkAbstraction {
    double alpha = 0.6;           // bandwidth/implementation efficiency
    double se_max_bps_hz = 4.4;   // spectral efficiency cap
    double rb_bandwidth_hz = 180e3;
    int n_rb = 100;
};

/// psd + 10 log10(bandwidth) + noise figure, in dBm.
double noise_power_dbm(double psd_dbm_hz, double bandwidth_hz, double noise_figure_db);

struct PmiSelection {
    int index = 0;
    double gain = 0.0;  // |h w|^2 of the selected codeword
};

/// Exhaustive rank-1 codebook selection for a 1x2 channel (h0, h1).
/// Ties resolve to the lowest codebook index.
PmiSelection select_pmi(std::complex<double> h0, std::complex<double> h1);

enum class InterfererPrecoding {
    Expected,  // |h|^2 / 2, the mean over an uninformed codeword choice
    Sampled,   // draw one codeword per interferer
};

/// One (UE, RU) link at a single RB.
struct LinkSignal {
    double rx_factor_mw = 0.0;  // per-RB tx power x linear macro gain
    std::complex<double> h0;
    std::complex<double> h1;
};

/// Linear SINR with interference treated as noise. Serving RUs add
/// non-coherently, each with its own selected precoder. rng is only needed
/// in Sampled mode. Throws std::invalid_argument on an empty serving set.
double sinr_linear(std::span<const LinkSignal> serving,
                   std::span<const LinkSignal> interferers, double noise_mw,
                   InterfererPrecoding mode = InterfererPrecoding::Expected,
                   std::mt19937_64* rng = nullptr);

/// min(alpha log2(1 + sinr), se_max), bit/s/Hz.
double spectral_efficiency(double sinr_linear, const LinkAbstraction& la);

/// se x RB bandwidth, bit/s.
double rb_rate_bps(double se_bps_hz, const LinkAbstraction& la);

}  // namespace hstsim
