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

#include <gtest/gtest.h>

#include "xnet/errors.hpp"
#include "xnet/link_sim.hpp"

#include <array>
#include <cmath>

using namespace xnet;

namespace
{
    ExtendedChannel channel(int M, int N, int mu, std::uint64_t seed)
    {
        return extend(sample_channel(M, N, mu, seed), 0, mu);
    }

    BeamformingPlan perfect(int M, const ExtendedChannel &ext, std::uint64_t seed)
    {
        return build_plan({SchemeChoice::perfect, M, 2, 1, {}}, ext, seed);
    }

    BeamformingPlan empty_plan(int M, int N, int mu)
    {
        BeamformingPlan p;
        p.M = M;
        p.N = N;
        p.mu = mu;
        p.V.assign(M * N, Eigen::MatrixXd(mu, 0));
        p.U.assign(M * N, Eigen::MatrixXd(mu, 0));
        return p;
    }
}

TEST(Transmit, SingleStreamNoiseless)
{
    const ExtendedChannel ext = channel(2, 2, 3, 1);
    BeamformingPlan p = empty_plan(2, 2, 3);
    const Eigen::VectorXd v = Eigen::Vector3d(0.3, -1.2, 0.7);
    p.V[p.index(2, 1)] = v;
    const double rho = 4.0;
    const Transmission t = transmit_receive(p, ext, rho, 5, 0.0);
    const double x = t.symbols[p.index(2, 1)](0);
    const double E = stream_energy(p, rho);
    EXPECT_DOUBLE_EQ(E, rho * 3);
    for (int j = 1; j <= 2; ++j)
    {
        const Eigen::VectorXd expected = std::sqrt(E) * x * ext.gain(j, 1).cwiseProduct(v.normalized());
        EXPECT_LT((t.received[j - 1] - expected).cwiseAbs().maxCoeff(), 1e-12);
    }
    EXPECT_EQ(t.transmitted[1].norm(), 0.0);
}

TEST(Transmit, Superposition)
{
    const ExtendedChannel ext = channel(3, 2, 4, 2);
    const BeamformingPlan p = perfect(3, ext, 2);
    const Transmission t = transmit_receive(p, ext, 10.0, 3, 0.0);
    const double amp = std::sqrt(stream_energy(p, 10.0));
    for (int j = 1; j <= 2; ++j)
    {
        Eigen::VectorXd y = Eigen::VectorXd::Zero(4);
        for (int k = 1; k <= 2; ++k)
            for (int i = 1; i <= 3; ++i)
                y += amp * t.symbols[p.index(k, i)](0) * ext.gain(j, i).cwiseProduct(p.beams(k, i).col(0).normalized());
        EXPECT_LT((t.received[j - 1] - y).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Transmit, EnergyPerTransmitter)
{
    const ExtendedChannel ext = channel(3, 2, 4, 4);
    const BeamformingPlan p = perfect(3, ext, 4);
    const double rho = 2.0;
    std::array<double, 3> total{};
    const int trials = 1000;
    for (int s = 0; s < trials; ++s)
    {
        const Transmission t = transmit_receive(p, ext, rho, derive_seed(7, "energy", s), 1.0);
        for (int i = 0; i < 3; ++i)
            total[i] += t.transmitted[i].squaredNorm();
    }
    const double E = stream_energy(p, rho);
    for (int i = 1; i <= 3; ++i)
    {
        const double expected = E * (p.streams(1, i) + p.streams(2, i));
        EXPECT_NEAR(total[i - 1] / trials, expected, 0.05 * expected);
    }
    EXPECT_DOUBLE_EQ(E * p.total_streams(), rho * p.mu);
}

TEST(Transmit, Deterministic)
{
    const ExtendedChannel ext = channel(2, 2, 3, 6);
    const BeamformingPlan p = perfect(2, ext, 6);
    const Transmission a = transmit_receive(p, ext, 3.0, 11);
    const Transmission b = transmit_receive(p, ext, 3.0, 11);
    const Transmission c = transmit_receive(p, ext, 3.0, 12);
    for (int j = 0; j < 2; ++j)
    {
        EXPECT_EQ(a.received[j], b.received[j]);
        EXPECT_NE(a.received[j], c.received[j]);
    }
}

TEST(Transmit, RejectsMismatch)
{
    const ExtendedChannel ext = channel(2, 2, 3, 6);
    const BeamformingPlan p = perfect(2, ext, 6);
    EXPECT_THROW(transmit_receive(p, channel(2, 2, 4, 6), 1.0, 1), ParameterError);
    EXPECT_THROW(transmit_receive(p, ext, -1.0, 1), ParameterError);
    BeamformingPlan bare = build_mx2(ext, 6);
    EXPECT_THROW(zf_decode(bare, ext, 1.0), StateError);
}

TEST(Decode, ResidualInterferenceVanishes)
{
    for (int M = 2; M <= 4; ++M)
    {
        const ExtendedChannel ext = channel(M, 2, M + 1, 8 + M);
        const BeamformingPlan p = perfect(M, ext, 8);
        for (double db : {40.0, 70.0})
        {
            const double E = stream_energy(p, db_to_linear(db));
            for (const auto &d : zf_decode(p, ext, db_to_linear(db)))
                EXPECT_LE(d.interference, 1e-9 * E * d.gain);
        }
    }
}

TEST(Decode, SinrScalesLinearly)
{
    const int mu = general_extension_length(2, 2, 2);
    const ExtendedChannel ext = channel(2, 2, mu, 9);
    const BeamformingPlan p = build_plan({SchemeChoice::general, 2, 2, 2, {}}, ext, 9);
    const auto lo = zf_decode(p, ext, 50.0);
    const auto hi = zf_decode(p, ext, 5000.0);
    ASSERT_EQ(lo.size(), hi.size());
    for (std::size_t s = 0; s < lo.size(); ++s)
    {
        const double ratio = hi[s].sinr / lo[s].sinr;
        EXPECT_GE(ratio, 99.0);
        EXPECT_LE(ratio, 101.0);
    }
}

TEST(Decode, NoiselessEstimatesRecoverSymbols)
{
    const ExtendedChannel ext = channel(3, 2, 4, 10);
    const BeamformingPlan p = perfect(3, ext, 10);
    const Transmission t = transmit_receive(p, ext, 100.0, 10, 0.0);
    for (const auto &d : zf_decode(p, ext, 100.0, &t, 0.0))
        EXPECT_NEAR(d.estimate, t.symbols[p.index(d.rx, d.tx)](d.stream), 1e-8);
}

TEST(Decode, MisalignedPlanSaturates)
{
    const ExtendedChannel ext = channel(3, 2, 4, 11);
    BeamformingPlan p = perfect(3, ext, 11);
    p.V[p.index(2, 3)](0, 0) *= 1.1;
    double worst_lo = INFINITY, worst_hi = INFINITY;
    for (const auto &d : zf_decode(p, ext, db_to_linear(40.0)))
        worst_lo = std::min(worst_lo, d.sinr);
    for (const auto &d : zf_decode(p, ext, db_to_linear(80.0)))
        worst_hi = std::min(worst_hi, d.sinr);
    // An interference-free stream would gain 10^4; leakage caps it.
    EXPECT_LT(worst_hi / worst_lo, 10.0);
}

TEST(SumRate, Basics)
{
    const ExtendedChannel ext = channel(2, 2, 3, 12);
    const BeamformingPlan p = perfect(2, ext, 12);
    EXPECT_GT(sum_rate(p, ext, 1.0), 0.0);
    EXPECT_EQ(sum_rate(empty_plan(2, 2, 3), ext, 1e6), 0.0);
    EXPECT_LT(sum_rate(p, ext, 10.0), sum_rate(p, ext, 100.0));
}

TEST(Slope, PointToPoint)
{
    SlopeSetup s;
    s.scheme = {SchemeChoice::general, 1, 1, 1, {}};
    s.seed = 21;
    EXPECT_NEAR(dof_slope(s, 40.0, 60.0), 1.0, 0.02);
}

TEST(Slope, ThreeByTwoPerfect)
{
    SlopeSetup s;
    s.scheme = {SchemeChoice::perfect, 3, 2, 1, {}};
    s.seed = 22;
    EXPECT_NEAR(dof_slope(s, 40.0, 60.0), 1.5, 0.03 * 1.5);
}

TEST(Slope, TwoByTwoSecondOrder)
{
    SlopeSetup s;
    s.scheme = {SchemeChoice::general, 2, 2, 2, {}};
    s.seed = 23;
    EXPECT_NEAR(dof_slope(s, 40.0, 60.0), 1.25, 0.03 * 1.25);
}

TEST(Slope, ScaleInvariance)
{
    SlopeSetup s;
    s.scheme = {SchemeChoice::perfect, 2, 2, 1, {}};
    s.seed = 24;
    const double base = dof_slope(s, 40.0, 60.0);
    s.scale = 3.0;
    EXPECT_NEAR(dof_slope(s, 40.0, 60.0), base, 0.03 * base);
}

TEST(Slope, GapStaysBounded)
{
    SlopeSetup s;
    s.scheme = {SchemeChoice::perfect, 3, 2, 1, {}};
    s.seed = 25;
    const std::array<double, 4> grid{40.0, 50.0, 60.0, 70.0};
    const auto pts = sweep(s, grid);
    EXPECT_LT(gap_variation(pts, 1.5), 0.1);
}

TEST(Slope, Preconditions)
{
    SlopeSetup s;
    s.scheme = {SchemeChoice::perfect, 2, 2, 1, {}};
    EXPECT_THROW(dof_slope(s, 20.0, 60.0), ParameterError);
    EXPECT_THROW(dof_slope(s, 40.0, 50.0), ParameterError);
    s.trials = 0;
    EXPECT_THROW(sweep(s, std::array<double, 1>{40.0}), ParameterError);
}
