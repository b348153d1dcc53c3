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

#include "xnet/channel.hpp"

#include "xnet/errors.hpp"

#include <cmath>
#include <string>

namespace xnet
{
    double ChannelProcess::coeff(int rx, int tx, int slot) const
    {
        if (rx < 1 || rx > N_ || tx < 1 || tx > M_)
            throw RangeError("node index out of range");
        if (slot < 1 || slot > T_)
            throw RangeError("slot " + std::to_string(slot) + " outside 1.." + std::to_string(T_));
        return coeffs_[(static_cast<std::size_t>(slot - 1) * N_ + (rx - 1)) * M_ + (tx - 1)];
    }

    ChannelProcess sample_channel(int M, int N, int T, std::uint64_t seed, ChannelBounds bounds)
    {
        if (M < 1 || N < 1 || T < 1)
            throw ParameterError("sample_channel needs M, N, T >= 1");
        bounds.validate();

        ChannelProcess p;
        p.M_ = M;
        p.N_ = N;
        p.T_ = T;
        p.seed_ = seed;
        p.bounds_ = bounds;
        p.coeffs_.resize(static_cast<std::size_t>(M) * N * T);

        BoundedSampler draw(seed, bounds);
        for (double &c : p.coeffs_)
            c = draw();
        return p;
    }

    ExtendedChannel::ExtendedChannel(int M, int N, std::vector<Eigen::VectorXd> gains, int base_slot)
        : M_(M), N_(N), mu_(0), base_slot_(base_slot), gains_(std::move(gains))
    {
        if (M < 1 || N < 1)
            throw ParameterError("extended channel needs M, N >= 1");
        if (gains_.size() != static_cast<std::size_t>(M) * N)
            throw ParameterError("extended channel needs M*N diagonals");
        mu_ = static_cast<int>(gains_.front().size());
        if (mu_ < 1)
            throw ParameterError("extension length must be >= 1");
        for (const auto &g : gains_)
        {
            if (g.size() != mu_)
                throw ParameterError("all diagonals must share the extension length");
            if (!g.allFinite())
                throw InputError("non-finite channel gain");
            if ((g.array() == 0.0).any())
                throw DegeneracyError("zero channel gain in a fully connected network");
        }
    }

    int ExtendedChannel::index(int rx, int tx) const
    {
        if (rx < 1 || rx > N_ || tx < 1 || tx > M_)
            throw RangeError("node index out of range");
        return (rx - 1) * M_ + (tx - 1);
    }

    const Eigen::VectorXd &ExtendedChannel::gain(int rx, int tx) const { return gains_[index(rx, tx)]; }

    Eigen::MatrixXd ExtendedChannel::matrix(int rx, int tx) const
    {
        return gain(rx, tx).asDiagonal();
    }

    ExtendedChannel ExtendedChannel::reciprocal() const
    {
        std::vector<Eigen::VectorXd> dual(gains_.size());
        // dual network: N transmitters, M receivers
        for (int j = 1; j <= N_; ++j)
            for (int i = 1; i <= M_; ++i)
                dual[(i - 1) * N_ + (j - 1)] = gain(j, i);
        return ExtendedChannel(N_, M_, std::move(dual), base_slot_);
    }

    ExtendedChannel ExtendedChannel::scaled(double c) const
    {
        if (c == 0.0 || !std::isfinite(c))
            throw ParameterError("channel scale must be finite and non-zero");
        std::vector<Eigen::VectorXd> g = gains_;
        for (auto &d : g)
            d *= c;
        return ExtendedChannel(M_, N_, std::move(g), base_slot_);
    }

    ExtendedChannel ExtendedChannel::with_gain(int rx, int tx, Eigen::VectorXd diagonal) const
    {
        std::vector<Eigen::VectorXd> g = gains_;
        g[index(rx, tx)] = std::move(diagonal);
        return ExtendedChannel(M_, N_, std::move(g), base_slot_);
    }

    ExtendedChannel extend(const ChannelProcess &proc, int kappa, int mu)
    {
        if (kappa < 0 || mu < 1)
            throw ParameterError("extend needs kappa >= 0 and mu >= 1");
        const long long end = static_cast<long long>(kappa + 1) * mu;
        if (end > proc.slots())
            throw RangeError("block " + std::to_string(kappa) + " of length " + std::to_string(mu) +
                             " exceeds the generated horizon of " + std::to_string(proc.slots()) + " slots");

        const int M = proc.transmitters();
        const int N = proc.receivers();
        const int base = kappa * mu;
        std::vector<Eigen::VectorXd> gains(static_cast<std::size_t>(M) * N, Eigen::VectorXd(mu));
        for (int j = 1; j <= N; ++j)
            for (int i = 1; i <= M; ++i)
                for (int r = 1; r <= mu; ++r)
                    gains[(j - 1) * M + (i - 1)](r - 1) = proc.coeff(j, i, base + r);
        return ExtendedChannel(M, N, std::move(gains), base);
    }
}
