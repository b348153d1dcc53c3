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

#include "xnet/relay_chain.hpp"

#include "xnet/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace xnet
{
    Rational relay_dof(int M, int K)
    {
        if (M < 1 || K < 1)
            throw ParameterError("relay network needs M, K >= 1");
        return make_rational(static_cast<long>(M) * K, 2L * (M + K - 1));
    }

    namespace
    {
        SchemeSpec hop_spec(int tx, int rx, const RelayOptions &o)
        {
            SchemeSpec s;
            s.scheme = o.scheme;
            s.M = tx;
            s.N = rx;
            s.order = o.order;
            s.general = o.general;
            return s;
        }
    }

    int hop1_length(int M, int K, const RelayOptions &options)
    {
        relay_dof(M, K);
        return scheme_length(hop_spec(M, K, options));
    }

    int hop2_length(int M, int K, const RelayOptions &options)
    {
        relay_dof(M, K);
        if (options.phase2 == Phase2Mode::reciprocal)
            return scheme_length(hop_spec(M, K, options));
        return scheme_length(hop_spec(K, M, options));
    }

    RelayTopology make_relay_topology(int M, int K, const RelayOptions &options)
    {
        const int mu1 = hop1_length(M, K, options);
        const int mu2 = hop2_length(M, K, options);
        return RelayTopology{M, K,
                             sample_channel(M, K, mu1, derive_seed(options.seed, "relay.hop1"), options.general.bounds),
                             sample_channel(K, M, mu2, derive_seed(options.seed, "relay.hop2"), options.general.bounds)};
    }

    RelayComposition compose_two_hop(const RelayTopology &topo, const RelayOptions &options)
    {
        const int M = topo.M;
        const int K = topo.K;
        if (topo.hop1.transmitters() != M || topo.hop1.receivers() != K || topo.hop2.transmitters() != K ||
            topo.hop2.receivers() != M)
            throw ParameterError("relay hop channels do not match M = " + std::to_string(M) + ", K = " + std::to_string(K));

        RelayComposition out;
        out.mu1 = hop1_length(M, K, options);
        out.mu2 = hop2_length(M, K, options);

        const ExtendedChannel ext1 = extend(topo.hop1, 0, out.mu1);
        out.hop1 = build_plan(hop_spec(M, K, options), ext1, derive_seed(options.seed, "relay.plan", 1),
                              options.verify.rank_tol);
        out.hop1_report = verify_plan(out.hop1, ext1, options.verify);
        if (!out.hop1_report.pass)
            throw StateError("phase-1 plan failed verification; relays cannot decode");

        const ExtendedChannel ext2 = extend(topo.hop2, 0, out.mu2);
        const std::uint64_t seed2 = derive_seed(options.seed, "relay.plan", 2);
        if (options.phase2 == Phase2Mode::reciprocal)
        {
            const ExtendedChannel rev = ext2.reciprocal();
            const BeamformingPlan primal = build_plan(hop_spec(M, K, options), rev, seed2, options.verify.rank_tol);
            out.hop2 = build_reciprocal(primal, rev, options.verify);
        }
        else
            out.hop2 = build_plan(hop_spec(K, M, options), ext2, seed2, options.verify.rank_tol);
        out.hop2_report = verify_plan(out.hop2, ext2, options.verify);

        for (int j = 1; j <= M; ++j)
            for (int k = 1; k <= K; ++k)
            {
                SubmessageLink link{j, k, out.hop1.streams(k, j), out.hop2.streams(j, k), 0};
                link.paired = std::min(link.hop1_streams, link.hop2_streams);
                if (options.strict && link.hop1_streams != link.hop2_streams)
                    throw ValidationError("submessage " + std::to_string(j) + "->" + std::to_string(k) + " carries " +
                                          std::to_string(link.hop1_streams) + " streams on hop 1 but " +
                                          std::to_string(link.hop2_streams) + " on hop 2");
                out.paired += link.paired;
                out.lost += std::abs(link.hop1_streams - link.hop2_streams);
                out.links.push_back(link);
            }
        out.end_to_end = make_rational(out.paired, out.mu1 + out.mu2);
        out.pass = out.hop1_report.pass && out.hop2_report.pass && out.lost == 0;
        return out;
    }
}
