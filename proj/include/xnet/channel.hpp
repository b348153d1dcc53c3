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

#include "xnet/random.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

/// Time-varying channel realizations of a fully connected M x N single-antenna X network.
///
/// Node indices are 1-based throughout the public API: receiver j in 1..N, transmitter
/// i in 1..M, matching the H^[ji] naming used in the alignment literature. Time slots are
/// 1-based as well, so an extension block kappa of length mu covers slots
/// kappa*mu + 1 .. (kappa+1)*mu.
namespace xnet
{
    class ChannelProcess
    {
    public:
        int transmitters() const noexcept { return M_; }
        int receivers() const noexcept { return N_; }
        int slots() const noexcept { return T_; }
        std::uint64_t seed() const noexcept { return seed_; }
        const ChannelBounds &bounds() const noexcept { return bounds_; }

        /// Coefficient H^[rx,tx](slot); slot in 1..slots().
        double coeff(int rx, int tx, int slot) const;

        /// All coefficients, slot-major then receiver then transmitter.
        std::span<const double> coefficients() const noexcept { return coeffs_; }

    private:
        friend ChannelProcess sample_channel(int, int, int, std::uint64_t, ChannelBounds);

        int M_ = 0;
        int N_ = 0;
        int T_ = 0;
        std::uint64_t seed_ = 0;
        ChannelBounds bounds_;
        std::vector<double> coeffs_;
    };

    /// i.i.d. draws, |c| ~ U[h_min, h_max] with a fair random sign, deterministic in the seed.
    ChannelProcess sample_channel(int M, int N, int T, std::uint64_t seed, ChannelBounds bounds = {});

    /// The mu x mu diagonal channel matrices of one symbol-extension block. Only the
    /// diagonals are stored; matrix() materializes the dense form.
    class ExtendedChannel
    {
    public:
        /// gains[(rx-1)*M + (tx-1)] holds the diagonal of H^[rx,tx]. Every entry must be
        /// non-zero and finite (DegeneracyError / InputError otherwise).
        ExtendedChannel(int M, int N, std::vector<Eigen::VectorXd> gains, int base_slot = 0);

        int transmitters() const noexcept { return M_; }
        int receivers() const noexcept { return N_; }
        int length() const noexcept { return mu_; }
        int base_slot() const noexcept { return base_slot_; }

        const Eigen::VectorXd &gain(int rx, int tx) const;
        Eigen::MatrixXd matrix(int rx, int tx) const;

        /// Reciprocal network: N transmitters, M receivers, gain_dual(i, j) = gain(j, i).
        ExtendedChannel reciprocal() const;

        /// Every coefficient multiplied by c (c != 0).
        ExtendedChannel scaled(double c) const;

        /// Copy with one diagonal replaced; used to probe which gains a construction reads.
        ExtendedChannel with_gain(int rx, int tx, Eigen::VectorXd diagonal) const;

    private:
        int index(int rx, int tx) const;

        int M_;
        int N_;
        int mu_;
        int base_slot_;
        std::vector<Eigen::VectorXd> gains_;
    };

    /// Block kappa (0-based) of length mu: entry r of H^[ji] is the coefficient at slot kappa*mu + r.
    ExtendedChannel extend(const ChannelProcess &proc, int kappa, int mu);
}
