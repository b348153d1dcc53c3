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

#include "xnet/channel.hpp"
#include "xnet/rational.hpp"
#include "xnet/schemes.hpp"

#include <cstdint>
#include <vector>

/// Two-hop parallel relay network: M sources reach M destinations through K half-duplex
/// relays. Source j splits its message into K submessages; in phase 1 submessage k is the
/// X-network message from source j to relay k, in phase 2 relay k forwards it to
/// destination j. Relays decode and forward.
namespace xnet
{
    /// MK / (2 (M + K - 1))
    Rational relay_dof(int M, int K);

    enum class Phase2Mode
    {
        reciprocal, ///< dual of an M x K plan built on the reciprocal of hop 2
        direct,     ///< K x M plan built on hop 2 itself; stream counts may not match hop 1
    };

    struct RelayOptions
    {
        SchemeChoice scheme = SchemeChoice::general;
        int order = 1;
        Phase2Mode phase2 = Phase2Mode::reciprocal;
        std::uint64_t seed = 1;
        VerifyOptions verify;
        GeneralOptions general;
        bool strict = false; ///< throw ValidationError on a per-submessage stream mismatch
    };

    struct RelayTopology
    {
        int M = 0;
        int K = 0;
        ChannelProcess hop1; ///< M transmitters, K receivers
        ChannelProcess hop2; ///< K transmitters, M receivers
    };

    /// Hop lengths for the scheme in `options`; throws ParameterError when the perfect
    /// scheme is requested for a topology that is neither M x 2 nor 2 x K.
    int hop1_length(int M, int K, const RelayOptions &options);
    int hop2_length(int M, int K, const RelayOptions &options);

    /// One extension block per hop, both hops drawn from options.seed.
    RelayTopology make_relay_topology(int M, int K, const RelayOptions &options);

    struct SubmessageLink
    {
        int source = 0;
        int relay = 0;
        int hop1_streams = 0;
        int hop2_streams = 0;
        int paired = 0;
    };

    struct RelayComposition
    {
        BeamformingPlan hop1;
        BeamformingPlan hop2;
        AlignmentReport hop1_report;
        AlignmentReport hop2_report;
        std::vector<SubmessageLink> links; ///< source-major, one entry per (source, relay)
        int paired = 0;
        int lost = 0; ///< streams of either hop left without a partner
        int mu1 = 0;
        int mu2 = 0;
        Rational end_to_end; ///< paired / (mu1 + mu2)
        bool pass = false;   ///< both hops verified and nothing lost
    };

    /// Phase 1 must verify before phase 2 is built (StateError otherwise).
    RelayComposition compose_two_hop(const RelayTopology &topology, const RelayOptions &options);
}
