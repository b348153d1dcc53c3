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

#include <Eigen/Core>

#include <cstdint>
#include <random>
#include <string_view>

namespace xnet
{
    /// Support of the bounded fading law: |h| uniform on [h_min, h_max], sign fair +-1.
    struct ChannelBounds
    {
        double h_min = 0.5;
        double h_max = 2.0;

        void validate() const;
    };

    /// Deterministic child seed. All randomness in a run derives from one top-level
    /// seed through this function, one named stream per consumer.
    std::uint64_t derive_seed(std::uint64_t base, std::string_view stream, std::uint64_t index = 0);

    /// Draws from the bounded law. Used for channel coefficients and for the random
    /// seed columns of the alignment constructions.
    class BoundedSampler
    {
    public:
        BoundedSampler(std::uint64_t seed, ChannelBounds bounds);

        double operator()();
        Eigen::VectorXd vector(Eigen::Index n);

    private:
        std::mt19937_64 engine_;
        std::uniform_real_distribution<double> magnitude_;
        std::bernoulli_distribution sign_;
    };
}
