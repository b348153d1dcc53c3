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

#include "xnet/rational.hpp"

#include <array>
#include <map>
#include <vector>

/// Slot-level model of the 2 x 2 X network with integer propagation delays, where the
/// delays alone align interference and each message gets one symbol every three slots.
///
/// Transmitter i sends message (j, i) in slots t = phase(j, i) mod 3, and a symbol sent at
/// t reaches receiver r in slot t + T_ri. Symbols are unit-duration tokens.
namespace xnet
{
    struct PropagationDelays
    {
        long T11 = 0;
        long T12 = 1;
        long T21 = 0;
        long T22 = 2;

        long at(int rx, int tx) const;
    };

    /// T11 = 0, T12 = 1, T21 = 0, T22 = 2 (mod 3). Negative delays throw ParameterError.
    bool validate_delays(const PropagationDelays &T);

    /// Transmit residue of message (rx, tx): W11 -> 0, W21 -> 1, W12 -> 1, W22 -> 0.
    int tx_phase(int rx, int tx);

    struct DelaySchedule
    {
        PropagationDelays delays;
        long horizon = 300; ///< transmissions occupy slots 0 .. horizon-1
    };

    enum class ArrivalRole
    {
        desired,
        interference,
    };

    struct Arrival
    {
        int msg_rx = 0;
        int msg_tx = 0;
        long sent = 0;
        ArrivalRole role = ArrivalRole::desired;
    };

    struct DelaySimulation
    {
        DelaySchedule schedule;
        /// per receiver (index rx-1): arrival slot -> arrivals in that slot
        std::array<std::map<long, std::vector<Arrival>>, 2> slots;
    };

    /// Throws ValidationError for an invalid schedule, ParameterError for horizon < 1.
    DelaySimulation simulate(const DelaySchedule &schedule);

    struct ThroughputReport
    {
        Rational total;                      ///< delivered desired symbols / horizon
        std::array<Rational, 4> per_message; ///< index (rx-1)*2 + (tx-1)
        long delivered = 0;
        long collisions = 0; ///< (receiver, slot) pairs where a desired symbol meets another arrival
    };

    /// A desired symbol counts when it is alone in its arrival slot. Needs a horizon that is
    /// a multiple of 3 (ParameterError otherwise).
    ThroughputReport throughput(const DelaySimulation &sim);
}
