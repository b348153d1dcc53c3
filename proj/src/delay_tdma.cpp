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

#include "xnet/delay_tdma.hpp"

#include "xnet/errors.hpp"

#include <string>

namespace xnet
{
    namespace
    {
        long mod3(long x) { return ((x % 3) + 3) % 3; }
    }

    long PropagationDelays::at(int rx, int tx) const
    {
        if (rx == 1 && tx == 1)
            return T11;
        if (rx == 1 && tx == 2)
            return T12;
        if (rx == 2 && tx == 1)
            return T21;
        if (rx == 2 && tx == 2)
            return T22;
        throw RangeError("delay index (" + std::to_string(rx) + "," + std::to_string(tx) + ") outside the 2x2 network");
    }

    bool validate_delays(const PropagationDelays &T)
    {
        if (T.T11 < 0 || T.T12 < 0 || T.T21 < 0 || T.T22 < 0)
            throw ParameterError("propagation delays must be non-negative");
        return mod3(T.T11) == 0 && mod3(T.T12) == 1 && mod3(T.T21) == 0 && mod3(T.T22) == 2;
    }

    int tx_phase(int rx, int tx)
    {
        if (rx < 1 || rx > 2 || tx < 1 || tx > 2)
            throw RangeError("message index outside the 2x2 network");
        return rx == tx ? 0 : 1;
    }

    DelaySimulation simulate(const DelaySchedule &schedule)
    {
        if (schedule.horizon < 1)
            throw ParameterError("horizon must be >= 1");
        if (!validate_delays(schedule.delays))
            throw ValidationError("propagation delays violate the alignment residues");

        DelaySimulation sim;
        sim.schedule = schedule;
        for (int tx = 1; tx <= 2; ++tx)
            for (int msg_rx = 1; msg_rx <= 2; ++msg_rx)
                for (long t = tx_phase(msg_rx, tx); t < schedule.horizon; t += 3)
                    for (int r = 1; r <= 2; ++r)
                    {
                        const Arrival a{msg_rx, tx, t, r == msg_rx ? ArrivalRole::desired : ArrivalRole::interference};
                        sim.slots[r - 1][t + schedule.delays.at(r, tx)].push_back(a);
                    }
        return sim;
    }

    ThroughputReport throughput(const DelaySimulation &sim)
    {
        const long horizon = sim.schedule.horizon;
        if (horizon % 3 != 0)
            throw ParameterError("throughput needs a horizon that is a multiple of 3");

        ThroughputReport rep;
        std::array<long, 4> counts{};
        for (const auto &receiver : sim.slots)
            for (const auto &[slot, arrivals] : receiver)
            {
                long desired = 0;
                for (const auto &a : arrivals)
                    desired += a.role == ArrivalRole::desired;
                if (desired == 0)
                    continue;
                if (arrivals.size() > 1)
                {
                    ++rep.collisions;
                    continue;
                }
                const Arrival &a = arrivals.front();
                ++counts[(a.msg_rx - 1) * 2 + (a.msg_tx - 1)];
                ++rep.delivered;
            }
        rep.total = make_rational(rep.delivered, horizon);
        for (int m = 0; m < 4; ++m)
            rep.per_message[m] = make_rational(counts[m], horizon);
        return rep;
    }
}
