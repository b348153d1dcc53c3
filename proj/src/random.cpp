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

#include "xnet/random.hpp"

#include "xnet/errors.hpp"

#include <cmath>

namespace xnet
{
    void ChannelBounds::validate() const
    {
        if (!(h_min > 0.0) || !(h_max > h_min) || !std::isfinite(h_max))
            throw ParameterError("channel bounds need 0 < h_min < h_max < inf");
    }

    namespace
    {
        std::uint64_t splitmix64(std::uint64_t x)
        {
            x += 0x9e3779b97f4a7c15ULL;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            return x ^ (x >> 31);
        }
    }

    std::uint64_t derive_seed(std::uint64_t base, std::string_view stream, std::uint64_t index)
    {
        // FNV-1a over the stream name, then mixed with base and index.
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : stream)
        {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return splitmix64(splitmix64(base ^ h) + index);
    }

    BoundedSampler::BoundedSampler(std::uint64_t seed, ChannelBounds bounds)
        : engine_(seed), magnitude_((bounds.validate(), bounds.h_min), bounds.h_max), sign_(0.5)
    {
    }

    double BoundedSampler::operator()()
    {
        double m = magnitude_(engine_);
        return sign_(engine_) ? m : -m;
    }

    Eigen::VectorXd BoundedSampler::vector(Eigen::Index n)
    {
        Eigen::VectorXd v(n);
        for (Eigen::Index r = 0; r < n; ++r)
            v(r) = (*this)();
        return v;
    }
}
