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

#include "hstsim/channel.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hstsim {

double hata_rural_pl(double distance_m, const PathlossParams& p) {
    const double d_km = std::max(distance_m, p.min_distance_m) / 1000.0;
    const double lf = std::log10(p.carrier_mhz);
    const double lhb = std::log10(p.bs_height_m);
    // urban term minus the open-area correction 4.78 lf^2 - 18.33 lf + 40.94
    return 69.55 + 26.16 * lf - 13.82 * lhb + (44.9 - 6.55 * lhb) * std::log10(d_km) -
           4.78 * lf * lf + 18.33 * lf - 40.94;
}

double antenna_gain_db(double theta_deg, const AntennaPattern& pat) {
    const double ratio = theta_deg / pat.theta_3db_deg;
    return -std::min(12.0 * ratio * ratio, pat.front_to_back_db);
}

double doppler_hz(double speed_mps, double carrier_hz) {
    return speed_mps * carrier_hz / kSpeedOfLightMps;
}

double macro_gain_db(double ue_pos_m, const RadioUnit& ru, const TrackLayout& layout,
                     const PathlossParams& p, const AntennaPattern& pat,
                     double penetration_db) {
    const LinkGeometry g = link_geometry(ue_pos_m, ru, layout);
    return -hata_rural_pl(g.distance_3d_m, p) + antenna_gain_db(g.boresight_angle_deg, pat) -
           penetration_db;
}

RbProjection::RbProjection(const FadingProfile& profile, int n_rb, double rb_bandwidth_hz)
    : n_taps_(profile.n_taps()), n_rb_(n_rb) {
    if (profile.tap_powers_db.size() != profile.tap_delays_ns.size())
        throw std::invalid_argument("RbProjection: tap delay/power lists differ in length");
    if (n_rb < 1 || rb_bandwidth_hz <= 0.0)
        throw std::invalid_argument("RbProjection: bad RB grid");

    double total = 0.0;
    std::vector<double> linear(profile.tap_powers_db.size());
    for (std::size_t k = 0; k < linear.size(); ++k) {
        linear[k] = std::pow(10.0, profile.tap_powers_db[k] / 10.0);
        total += linear[k];
    }

    weights_.resize(static_cast<std::size_t>(n_taps_) * n_rb_);
    for (int k = 0; k < n_taps_; ++k) {
        const double amp = std::sqrt(linear[static_cast<std::size_t>(k)] / total);
        const double tau_s = profile.tap_delays_ns[static_cast<std::size_t>(k)] * 1e-9;
        for (int rb = 0; rb < n_rb_; ++rb) {
            // baseband RB center frequency, grid centered on the carrier
            const double f_rb = (rb - (n_rb_ - 1) / 2.0) * rb_bandwidth_hz;
            const double phase = -2.0 * std::numbers::pi * f_rb * tau_s;
            weights_[static_cast<std::size_t>(k) * n_rb_ + rb] =
                std::polar(amp, phase);
        }
    }
}

FadingProcess::FadingProcess(int n_taps, int n_antennas, double doppler_hz,
                             std::mt19937_64& rng)
    : n_taps_(n_taps), n_antennas_(n_antennas) {
    if (n_taps < 1 || n_antennas < 1)
        throw std::invalid_argument("FadingProcess: need at least one tap and antenna");

    std::uniform_real_distribution<double> uniform_angle(-std::numbers::pi, std::numbers::pi);
    const double wd = 2.0 * std::numbers::pi * doppler_hz;
    const int m = kSinusoids;

    params_.resize(static_cast<std::size_t>(n_antennas_) * n_taps_ * 4 * m);
    for (int a = 0; a < n_antennas_; ++a) {
        for (int k = 0; k < n_taps_; ++k) {
            double* p = params_.data() + (static_cast<std::size_t>(a) * n_taps_ + k) * 4 * m;
            const double theta = uniform_angle(rng);
            for (int n = 0; n < m; ++n) {
                // arrival angles stratified over one quadrant; over the theta
                // ensemble they tile it uniformly, giving the Clarke spectrum
                const double alpha =
                    (2.0 * std::numbers::pi * (n + 1) - std::numbers::pi + theta) / (4.0 * m);
                p[n] = wd * std::cos(alpha);          // omega_i
                p[m + n] = uniform_angle(rng);        // phi_i
                p[2 * m + n] = wd * std::sin(alpha);  // omega_q
                p[3 * m + n] = uniform_angle(rng);    // phi_q
            }
        }
    }
}

std::complex<double> FadingProcess::tap_coeff(int antenna, int tap, double t_s) const {
    const double* p = tap_params(antenna, tap);
    constexpr int m = kSinusoids;
    double gi = 0.0;
    double gq = 0.0;
    for (int n = 0; n < m; ++n) {
        gi += std::cos(p[n] * t_s + p[m + n]);
        gq += std::cos(p[2 * m + n] * t_s + p[3 * m + n]);
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(m));
    return {gi * norm, gq * norm};
}

std::complex<double> FadingProcess::sample(int tti, int rb, int antenna,
                                           const RbProjection& proj) const {
    assert(proj.n_taps() == n_taps_);
    const double t = tti * kTtiSeconds;
    std::complex<double> h{0.0, 0.0};
    for (int k = 0; k < n_taps_; ++k) h += tap_coeff(antenna, k, t) * proj.weight(k, rb);
    return h;
}

void FadingProcess::sample_row(int tti, int antenna, const RbProjection& proj,
                               std::span<std::complex<double>> out) const {
    assert(proj.n_taps() == n_taps_);
    assert(static_cast<int>(out.size()) == proj.n_rb());
    const double t = tti * kTtiSeconds;
    std::fill(out.begin(), out.end(), std::complex<double>{0.0, 0.0});
    const int n_rb = proj.n_rb();
    for (int k = 0; k < n_taps_; ++k) {
        const std::complex<double> g = tap_coeff(antenna, k, t);
        const std::complex<double>* w = proj.row(k);
        for (int rb = 0; rb < n_rb; ++rb) out[static_cast<std::size_t>(rb)] += g * w[rb];
    }
}

}  // namespace hstsim
