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

#include "hstsim/phy.hpp"

#include <algorithm>
#include <stdexcept>

namespace hstsim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

double codeword_gain(int index, std::complex<double> h0, std::complex<double> h1) {
    const auto w = codebook_entry(index);
    return std::norm(h0 * w[0] + h1 * w[1]);
}

}  // namespace

std::array<std::complex<double>, 2> codebook_entry(int index) {
    switch (index) {
        case 0: return {std::complex<double>{kInvSqrt2, 0.0}, std::complex<double>{kInvSqrt2, 0.0}};
        case 1: return {std::complex<double>{kInvSqrt2, 0.0}, std::complex<double>{-kInvSqrt2, 0.0}};
        case 2: return {std::complex<double>{kInvSqrt2, 0.0}, std::complex<double>{0.0, kInvSqrt2}};
        case 3: return {std::complex<double>{kInvSqrt2, 0.0}, std::complex<double>{0.0, -kInvSqrt2}};
        default: throw std::out_of_range("codebook_entry: index must be in [0, 3]");
    }
}

double noise_power_dbm(double psd_dbm_hz, double bandwidth_hz, double noise_figure_db) {
    if (bandwidth_hz <= 0.0) throw std::invalid_argument("noise_power_dbm: bandwidth must be > 0");
    return psd_dbm_hz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

PmiSelection select_pmi(std::complex<double> h0, std::complex<double> h1) {
    PmiSelection best{0, codeword_gain(0, h0, h1)};
    for (int i = 1; i < kCodebookSize; ++i) {
        const double g = codeword_gain(i, h0, h1);
        if (g > best.gain) best = {i, g};
    }
    return best;
}

double sinr_linear(std::span<const LinkSignal> serving,
                   std::span<const LinkSignal> interferers, double noise_mw,
                   InterfererPrecoding mode, std::mt19937_64* rng) {
    if (serving.empty()) throw std::invalid_argument("sinr_linear: unassociated UE (empty serving set)");

    double numerator = 0.0;
    for (const LinkSignal& s : serving)
        numerator += s.rx_factor_mw * select_pmi(s.h0, s.h1).gain;

    double denominator = noise_mw;
    for (const LinkSignal& i : interferers) {
        double gain;
        if (mode == InterfererPrecoding::Sampled) {
            if (rng == nullptr)
                throw std::invalid_argument("sinr_linear: Sampled mode needs an rng");
            std::uniform_int_distribution<int> pick(0, kCodebookSize - 1);
            gain = codeword_gain(pick(*rng), i.h0, i.h1);
        } else {
            gain = (std::norm(i.h0) + std::norm(i.h1)) / 2.0;
        }
        denominator += i.rx_factor_mw * gain;
    }
    return numerator / denominator;
}

double spectral_efficiency(double sinr_linear, const LinkAbstraction& la) {
    if (sinr_linear < 0.0) throw std::invalid_argument("spectral_efficiency: sinr must be >= 0");
    return std::min(la.alpha * std::log2(1.0 + sinr_linear), la.se_max_bps_hz);
}

double rb_rate_bps(double se_bps_hz, const LinkAbstraction& la) {
    return se_bps_hz * la.rb_bandwidth_hz;
}

}  // namespace hstsim
