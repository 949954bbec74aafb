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

#include <complex>
#include <random>
#include <span>
#include <vector>

#include "hstsim/geometry.hpp"

namespace hstsim {

constexpr double kSpeedOfLightMps = 2.99792458e8;
constexpr double kTtiSeconds = 1e-3;

struct PathlossParams {
    double carrier_mhz = 2140.0;
    double bs_height_m = 30.0;
    double min_distance_m = 35.0;  // clamp floor
};

/// Okumura-Hata open-area (rural) path loss in dB. The distance is clamped
/// below at p.min_distance_m before evaluation. Classical Hata tops out at
/// 2000 MHz; usage at 2140 MHz follows common LTE link-budget practice.
double hata_rural_pl(double distance_m, const PathlossParams& p);

/// Parabolic sector pattern, front-to-back floor A_m.
struct AntennaPattern {
    double theta_3db_deg = 65.0;
    double front_to_back_db = 20.0;  // A_m
};

/// -min(12 (theta/theta_3dB)^2, A_m) dB, theta in [0, 180].
double antenna_gain_db(double theta_deg, const AntennaPattern& pat);

/// Classical Doppler shift v * f_c / c.
double doppler_hz(double speed_mps, double carrier_hz);

/// Macroscopic link gain in dB (negative = attenuation):
/// -pathloss + antenna gain - penetration.
double macro_gain_db(double ue_pos_m, const RadioUnit& ru, const TrackLayout& layout,
                     const PathlossParams& p, const AntennaPattern& pat,
                     double penetration_db);

/// Tapped delay line, defaults are ITU-R Vehicular A. Tap powers are
/// normalized to unit total linear power before use.
struct FadingProfile {
    std::vector<double> tap_delays_ns = {0.0, 310.0, 710.0, 1090.0, 1730.0, 2510.0};
    std::vector<double> tap_powers_db = {0.0, -1.0, -9.0, -10.0, -15.0, -20.0};
    int n_taps() const { return static_cast<int>(tap_delays_ns.size()); }
};

/// Per-(tap, RB) projection weight: normalized tap amplitude folded with the
/// phase rotation exp(-j 2 pi f_rb tau) at the RB center frequency. The same
/// table serves every link, so it is built once per run.
class RbProjection {
  public:
    RbProjection(const FadingProfile& profile, int n_rb, double rb_bandwidth_hz);

    int n_taps() const { return n_taps_; }
    int n_rb() const { return n_rb_; }
    std::complex<double> weight(int tap, int rb) const {
        return weights_[static_cast<std::size_t>(tap) * n_rb_ + rb];
    }
    const std::complex<double>* row(int tap) const {
        return weights_.data() + static_cast<std::size_t>(tap) * n_rb_;
    }

  private:
    int n_taps_;
    int n_rb_;
    std::vector<std::complex<double>> weights_;
};

/// Time-correlated Rayleigh fading for one link: an independent sum-of-
/// sinusoids process (Clarke spectrum) per tx antenna and tap. All randomness
/// is drawn at construction; sampling is a pure function of the TTI index, so
/// the ensemble autocorrelation across TTIs is exactly J0(2 pi f_d dt) and a
/// zero Doppler freezes the channel.
class FadingProcess {
  public:
    static constexpr int kSinusoids = 16;

    FadingProcess(int n_taps, int n_antennas, double doppler_hz, std::mt19937_64& rng);

    int n_antennas() const { return n_antennas_; }
    int n_taps() const { return n_taps_; }

    /// Unit-power tap coefficient at time t.
    std::complex<double> tap_coeff(int antenna, int tap, double t_s) const;

    /// Flat per-RB coefficient: sum of tap coefficients rotated by the RB
    /// projection. Unit average power per antenna and RB.
    std::complex<double> sample(int tti, int rb, int antenna, const RbProjection& proj) const;

    /// All RBs of one antenna at one TTI; out.size() must equal proj.n_rb().
    void sample_row(int tti, int antenna, const RbProjection& proj,
                    std::span<std::complex<double>> out) const;

  private:
    int n_taps_;
    int n_antennas_;
    // per (antenna, tap): kSinusoids x {omega_i, phi_i, omega_q, phi_q}
    std::vector<double> params_;

    const double* tap_params(int antenna, int tap) const {
        return params_.data() +
               (static_cast<std::size_t>(antenna) * n_taps_ + tap) * 4 * kSinusoids;
    }
};

}  // namespace hstsim
