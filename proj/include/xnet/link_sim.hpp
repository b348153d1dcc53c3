// xnet - interference alignment toolkit for wireless X networks
// Copyright (C) 2026 The xnet authors
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

#include "xnet/schemes.hpp"

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

/// Transmission through a plan, zero-forcing reception and finite-SNR rates.
///
/// Power model: rho is the total transmit power per channel use, split equally over the
/// S streams of the plan. Beam directions are used at unit norm, so a stream carries
/// energy mu * rho / S per extension block. Noise is white with variance noise_var per
/// receive dimension.
namespace xnet
{
    /// Energy per stream per block, mu * rho / S (0 for a plan without streams).
    double stream_energy(const BeamformingPlan &plan, double rho);

    struct Transmission
    {
        std::vector<Eigen::VectorXd> symbols;     ///< per message, one unit-variance symbol per stream
        std::vector<Eigen::VectorXd> transmitted; ///< per transmitter, length mu
        std::vector<Eigen::VectorXd> received;    ///< per receiver, length mu
    };

    /// Y^[j] = sum_i H^[ji] X^[i] + Z^[j] with Gaussian symbols and noise drawn from `seed`.
    Transmission transmit_receive(const BeamformingPlan &plan, const ExtendedChannel &ext, double rho,
                                  std::uint64_t seed, double noise_var = 1.0);

    struct StreamDecode
    {
        int rx = 0;
        int tx = 0;
        int stream = 0;              ///< 0-based column within the message
        double gain = 0.0;           ///< |u^T H v|^2 with unit v
        double interference = 0.0;   ///< post zero-forcing interference power
        double noise = 0.0;          ///< noise_var |u|^2
        double sinr = 0.0;
        double estimate = 0.0;       ///< u^T Y / (sqrt(E) u^T H v) when a received vector is given
    };

    /// Per-stream statistics of the zero-forcing receiver; `received` is optional.
    std::vector<StreamDecode> zf_decode(const BeamformingPlan &plan, const ExtendedChannel &ext, double rho,
                                        const Transmission *received = nullptr, double noise_var = 1.0);

    /// (1/mu) sum_streams log2(1 + SINR) in bits per channel use.
    double sum_rate(const BeamformingPlan &plan, const ExtendedChannel &ext, double rho, double noise_var = 1.0);

    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

    struct SlopeSetup
    {
        SchemeSpec scheme;
        std::uint64_t seed = 1;
        int trials = 200;
        double scale = 1.0; ///< common factor applied to every channel coefficient
        ChannelBounds bounds;
        double rank_tol = 1e-9;
    };

    struct RatePoint
    {
        double rho_db = 0.0;
        double mean = 0.0;
        double std_error = 0.0;
    };

    /// Mean sum rate over `trials` independent extension blocks of one time-varying channel,
    /// with a fresh plan per block. Every SNR point reuses the same blocks and plans.
    std::vector<RatePoint> sweep(const SlopeSetup &setup, std::span<const double> rho_db);

    /// (R(hi) - R(lo)) / (log2 rho_hi - log2 rho_lo)
    double slope_between(const RatePoint &lo, const RatePoint &hi);

    /// Needs lo_db >= 30 and hi_db >= lo_db + 20 (ParameterError otherwise).
    double dof_slope(const SlopeSetup &setup, double lo_db, double hi_db);

    /// max - min over the points of R(rho) - dof * log2(rho).
    double gap_variation(std::span<const RatePoint> points, double dof);
}
