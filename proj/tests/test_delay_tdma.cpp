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

#include "xnet/delay_tdma.hpp"
#include "xnet/errors.hpp"

#include <set>

using namespace xnet;

TEST(Delays, Validation)
{
    EXPECT_TRUE(validate_delays({}));
    EXPECT_TRUE(validate_delays({3, 4, 6, 5}));
    EXPECT_FALSE(validate_delays({0, 0, 0, 2}));
    EXPECT_FALSE(validate_delays({1, 1, 0, 2}));
    EXPECT_THROW(validate_delays({0, -2, 0, 2}), ParameterError);
    EXPECT_THROW(PropagationDelays{}.at(3, 1), RangeError);
}

TEST(Delays, Phases)
{
    EXPECT_EQ(tx_phase(1, 1), 0);
    EXPECT_EQ(tx_phase(2, 1), 1);
    EXPECT_EQ(tx_phase(1, 2), 1);
    EXPECT_EQ(tx_phase(2, 2), 0);
    EXPECT_THROW(tx_phase(0, 1), RangeError);
}

TEST(Delays, ArrivalResidues)
{
    const DelaySimulation sim = simulate({});
    // receiver, message -> residue of its arrival slot
    std::set<long> interference[2];
    for (int r = 1; r <= 2; ++r)
        for (const auto &[slot, arrivals] : sim.slots[r - 1])
            for (const auto &a : arrivals)
            {
                EXPECT_EQ(slot, a.sent + PropagationDelays{}.at(r, a.msg_tx));
                EXPECT_EQ(a.sent % 3, tx_phase(a.msg_rx, a.msg_tx));
                if (a.role == ArrivalRole::interference)
                    interference[r - 1].insert(slot % 3);
                else
                    EXPECT_EQ(a.msg_rx, r);
            }
    EXPECT_EQ(interference[0], std::set<long>{1});
    EXPECT_EQ(interference[1], std::set<long>{0});
}

TEST(Delays, NoCollisions)
{
    for (const PropagationDelays T : {PropagationDelays{}, PropagationDelays{3, 1, 0, 5}, PropagationDelays{0, 7, 9, 2}})
    {
        const ThroughputReport rep = throughput(simulate({T, 300}));
        EXPECT_EQ(rep.collisions, 0);
        EXPECT_EQ(rep.total, make_rational(4, 3));
        for (const Rational &q : rep.per_message)
            EXPECT_EQ(q, make_rational(1, 3));
    }
}

TEST(Delays, ShortestHorizon)
{
    const ThroughputReport rep = throughput(simulate({{}, 3}));
    EXPECT_EQ(rep.delivered, 4);
    EXPECT_EQ(rep.total, make_rational(4, 3));
}

TEST(Delays, PeriodicPattern)
{
    // Away from both ends of the horizon every slot sees the pattern of the slot 3 later.
    const DelaySimulation sim = simulate({{}, 30});
    for (int r = 0; r < 2; ++r)
        for (const auto &[slot, arrivals] : sim.slots[r])
        {
            if (slot < 3 || slot + 3 >= 30)
                continue;
            const auto next = sim.slots[r].find(slot + 3);
            if (next == sim.slots[r].end())
                continue;
            ASSERT_EQ(next->second.size(), arrivals.size());
            for (std::size_t a = 0; a < arrivals.size(); ++a)
            {
                EXPECT_EQ(next->second[a].msg_rx, arrivals[a].msg_rx);
                EXPECT_EQ(next->second[a].msg_tx, arrivals[a].msg_tx);
            }
        }
}

TEST(Delays, EachTransmitterIdleOnce)
{
    for (int tx = 1; tx <= 2; ++tx)
    {
        std::set<int> used;
        for (int rx = 1; rx <= 2; ++rx)
            used.insert(tx_phase(rx, tx));
        EXPECT_EQ(used.size(), 2U);
        EXPECT_EQ(used.count(2), 0U);
    }
}

TEST(Delays, Errors)
{
    EXPECT_THROW(simulate({{0, 0, 0, 0}, 30}), ValidationError);
    EXPECT_THROW(simulate({{}, 0}), ParameterError);
    EXPECT_THROW(throughput(simulate({{}, 31})), ParameterError);
}

TEST(Delays, MisalignedDelaysCollide)
{
    // Bypasses simulate's guard: with T12 = 0 the receiver-1 interference no longer lines up.
    DelaySimulation sim = simulate({{}, 30});
    sim.slots[0].clear();
    for (int tx = 1; tx <= 2; ++tx)
        for (int msg_rx = 1; msg_rx <= 2; ++msg_rx)
            for (long t = tx_phase(msg_rx, tx); t < 30; t += 3)
                sim.slots[0][t].push_back({msg_rx, tx, t, msg_rx == 1 ? ArrivalRole::desired : ArrivalRole::interference});
    EXPECT_GT(throughput(sim).collisions, 0);
}
