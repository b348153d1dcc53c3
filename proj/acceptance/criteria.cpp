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

#include "criteria.hpp"
#include "vertex_oracle.hpp"

#include "xnet/alignment_core.hpp"
#include "xnet/channel.hpp"
#include "xnet/delay_tdma.hpp"
#include "xnet/dof_region.hpp"
#include "xnet/errors.hpp"
#include "xnet/link_sim.hpp"
#include "xnet/relay_chain.hpp"
#include "xnet/schemes.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

namespace xnet::acceptance
{
    namespace
    {
        constexpr std::uint64_t base_seed = 20260101;

        std::string fmt(const char *f, double x)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, f, x);
            return buf;
        }

        bool same(const Rational &q, const oracle::Fraction &f)
        {
            return q == make_rational(static_cast<long>(f.numerator()), static_cast<long>(f.denominator()));
        }

        std::string frac(const oracle::Fraction &f)
        {
            return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
        }

        struct Outcome
        {
            bool pass = true;
            std::ostringstream detail;
        };

        // Outerbound values against the closed form and the vertex oracle.
        void outerbound(Outcome &o)
        {
            int mismatches = 0;
            for (int M = 1; M <= 6; ++M)
                for (int N = 1; N <= 6; ++N)
                {
                    const auto sol = solve_lp(region_constraints(DofRegionSpec::single_antenna(M, N)));
                    const Rational expect = make_rational(M * N, M + N - 1);
                    if (sol.value != expect)
                        ++mismatches;
                    if (M * N <= 6)
                        if (!same(sol.value, oracle::max_over_vertices(oracle::x_network_polytope(M, N)).value))
                            ++mismatches;
                }

            DofRegionSpec spec = DofRegionSpec::single_antenna(3, 3);
            for (int k = 1; k <= 3; ++k)
                spec.null_mask.insert({k, k});
            const auto lp = solve_lp(region_constraints(spec));
            const auto ref = oracle::max_over_vertices(oracle::x_network_polytope(3, 3, {{1, 1}, {2, 2}, {3, 3}}));
            const bool null_ok = same(lp.value, ref.value);
            o.pass = mismatches == 0 && null_ok;
            o.detail << "MN/(M+N-1) mismatches over 1<=M,N<=6: " << mismatches << "; 3x3 null-diagonal simplex "
                     << to_string(lp.value) << " vs oracle " << frac(ref.value) << " (" << ref.vertices << " vertices)";
        }

        void perfect_mx2(Outcome &o)
        {
            for (int M = 2; M <= 5; ++M)
            {
                int full = 0;
                double worst = 0.0;
                bool dof_ok = true;
                for (int s = 0; s < 100; ++s)
                {
                    const std::uint64_t seed = derive_seed(base_seed, "acceptance.mx2", M * 1000 + s);
                    const ExtendedChannel ext = extend(sample_channel(M, 2, M + 1, seed), 0, M + 1);
                    BeamformingPlan plan = build_mx2(ext, derive_seed(seed, "plan"));
                    worst = std::max(worst, perfect_alignment_residual(plan, ext));
                    dof_ok = dof_ok && achieved_dof(plan) == make_rational(2 * M, M + 1);
                    try
                    {
                        compute_zero_forcing(plan, ext);
                        const auto rep = verify_plan(plan, ext);
                        bool all = true;
                        for (bool f : rep.lambda_full_rank)
                            all = all && f;
                        full += all;
                    }
                    catch (const RankFailure &)
                    {
                    }
                }
                const bool ok = worst < 1e-12 && full >= 99 && dof_ok;
                o.pass = o.pass && ok;
                o.detail << "M=" << M << ": res " << fmt("%.1e", worst) << ", full rank " << full << "/100, dof "
                         << (dof_ok ? "exact" : "WRONG") << "; ";
            }
        }

        void reciprocity(Outcome &o)
        {
            for (int M = 2; M <= 4; ++M)
            {
                int passed = 0;
                double worst = 0.0;
                for (int s = 0; s < 100; ++s)
                {
                    const std::uint64_t seed = derive_seed(base_seed, "acceptance.dual", M * 1000 + s);
                    const ExtendedChannel ext = extend(sample_channel(M, 2, M + 1, seed), 0, M + 1);
                    try
                    {
                        BeamformingPlan primal = build_mx2(ext, derive_seed(seed, "plan"));
                        compute_zero_forcing(primal, ext);
                        const BeamformingPlan dual = build_reciprocal(primal, ext);
                        const auto rep = verify_plan(dual, ext.reciprocal());
                        worst = std::max(worst, rep.max_cross_gain);
                        passed += rep.pass && rep.max_cross_gain < 1e-9 &&
                                  dual.total_streams() == primal.total_streams() && dual.mu == primal.mu;
                    }
                    catch (const Error &)
                    {
                    }
                }
                o.pass = o.pass && passed == 100;
                o.detail << "2x" << M << ": " << passed << "/100 pass, max cross " << fmt("%.1e", worst) << "; ";
            }
        }

        struct GeneralCase
        {
            int M, N, n;
        };
        const GeneralCase general_cases[] = {{2, 2, 1}, {2, 2, 2}, {2, 2, 3}, {2, 3, 1}, {2, 3, 2},
                                             {3, 2, 1}, {3, 2, 2}, {3, 3, 1}};

        long ipow(long b, int e)
        {
            long p = 1;
            while (e-- > 0)
                p *= b;
            return p;
        }

        void general(Outcome &o)
        {
            // Printed-formula values, evaluated by hand.
            const std::pair<GeneralCase, Rational> printed[] = {
                {{2, 2, 1}, make_rational(6, 5)}, {{2, 2, 2}, make_rational(10, 8)}, {{2, 3, 1}, make_rational(15, 13)}};
            for (const auto &[c, q] : printed)
                if (general_dof_formula(c.M, c.N, c.n) != q)
                {
                    o.pass = false;
                    o.detail << "formula mismatch at (" << c.M << "," << c.N << "," << c.n << "); ";
                }

            const int seeds = 10;
            Rational prev;
            int prevM = 0, prevN = 0;
            for (const auto &c : general_cases)
            {
                const int G = (c.M - 1) * (c.N - 1);
                const int mu = general_extension_length(c.M, c.N, c.n);
                const int expected_dim = (c.N - 1) * static_cast<int>(ipow(c.n + 1, G));
                // Closed form written out independently of the library.
                const Rational closed = make_rational(c.N * ipow(c.n + 1, G) + (c.M - 1) * c.N * ipow(c.n, G),
                                                      c.N * ipow(c.n + 1, G) + (c.M - 1) * ipow(c.n, G));
                int passed = 0;
                double worst_ratio = 1.0;
                for (int s = 0; s < seeds; ++s)
                {
                    const std::uint64_t seed = derive_seed(base_seed, "acceptance.general", s);
                    const ExtendedChannel ext = extend(sample_channel(c.M, c.N, mu, seed), 0, mu);
                    try
                    {
                        BeamformingPlan plan = build_general(c.M, c.N, c.n, ext, derive_seed(seed, "plan"));
                        compute_zero_forcing(plan, ext);
                        const auto rep = verify_plan(plan, ext);
                        bool dims = true;
                        for (int d : rep.interference_dim)
                            dims = dims && d == expected_dim;
                        for (double r : rep.lambda_ratio)
                            worst_ratio = std::min(worst_ratio, r);
                        passed += rep.pass && dims && rep.achieved_dof == closed;
                    }
                    catch (const Error &)
                    {
                    }
                }
                bool mono = true;
                if (prevM == c.M && prevN == c.N)
                    mono = prev < closed;
                const bool below = closed < total_dof_bound(c.M, c.N);
                prev = closed;
                prevM = c.M;
                prevN = c.N;
                const bool ok = passed == seeds && mono && below;
                o.pass = o.pass && ok;
                o.detail << "(" << c.M << "," << c.N << "," << c.n << ") " << to_string(closed) << " " << passed << "/"
                         << seeds << (mono ? "" : " NOT-INCREASING") << " minratio " << fmt("%.0e", worst_ratio)
                         << "; ";
            }
        }

        void slopes(Outcome &o)
        {
            const double pts[] = {40.0, 60.0};
            const double gap_pts[] = {40.0, 50.0, 60.0, 70.0};
            for (int M = 2; M <= 5; ++M)
            {
                SlopeSetup setup;
                setup.scheme = SchemeSpec{SchemeChoice::perfect, M, 2, 1, {}};
                setup.seed = derive_seed(base_seed, "acceptance.slope.perfect", M);
                setup.trials = 200;
                const double dof = to_double(make_rational(2 * M, M + 1));
                const auto r = sweep(setup, gap_pts);
                const double slope = slope_between(r[0], r[2]);
                const double err = std::abs(slope - dof) / dof;
                const double gap = gap_variation(r, dof);
                o.pass = o.pass && err < 0.03 && gap < 0.1;
                o.detail << M << "x2 slope " << fmt("%.4f", slope) << " (" << fmt("%.1f", 100 * err) << "%) gap "
                         << fmt("%.3f", gap) << "; ";
            }
            for (const auto &c : general_cases)
            {
                SlopeSetup setup;
                setup.scheme = SchemeSpec{SchemeChoice::general, c.M, c.N, c.n, {}};
                setup.seed = derive_seed(base_seed, "acceptance.slope.general", c.M * 100 + c.N * 10 + c.n);
                setup.trials = 200;
                const double dof = to_double(general_dof_formula(c.M, c.N, c.n));
                const auto r = sweep(setup, pts);
                const double slope = slope_between(r[0], r[1]);
                const double err = std::abs(slope - dof) / dof;
                o.pass = o.pass && err < 0.03;
                o.detail << "(" << c.M << "," << c.N << "," << c.n << ") " << fmt("%.4f", slope) << " vs "
                         << fmt("%.4f", dof) << " (" << fmt("%.1f", 100 * err) << "%); ";
            }
        }

        void lemmas(Outcome &o)
        {
            for (int size = 1; size <= 6; ++size)
            {
                int full = 0, two = 0;
                for (int s = 0; s < 1000; ++s)
                {
                    const std::uint64_t seed = derive_seed(base_seed, "acceptance.lemma1", size * 10000 + s);
                    full += numeric_rank(lemma1_matrix(size, 1, seed)).rank == size;
                    two += numeric_rank(lemma1_matrix(size, 2, seed)).rank == size;
                }
                o.pass = o.pass && full >= 999;
                o.detail << "L1 M=" << size << " " << full << "/1000 (two-variable rows " << two << "); ";
            }
            for (int G = 1; G <= 3; ++G)
                for (int n = 1; n <= 2; ++n)
                {
                    const int wide = static_cast<int>(ipow(n + 1, G));
                    const int narrow = static_cast<int>(ipow(n, G));
                    const int mu = wide + 1;
                    int ok = 0;
                    double shift = 0.0;
                    for (int s = 0; s < 100; ++s)
                    {
                        const std::uint64_t seed = derive_seed(base_seed, "acceptance.lemma2", G * 1000 + n * 100 + s);
                        BoundedSampler draw(seed, {});
                        std::vector<Eigen::VectorXd> gens;
                        for (int g = 0; g < G; ++g)
                            gens.push_back(draw.vector(mu));
                        const SubspacePair pair = build_subspace_pair(gens, draw.vector(mu), n);
                        double e = 0.0;
                        for (int g = 0; g < G; ++g)
                            e = std::max(e, generator_shift_error(pair, g));
                        shift = std::max(shift, e);
                        ok += e < 1e-12 && numeric_rank(pair.Vp).rank == wide && numeric_rank(pair.V).rank == narrow;
                    }
                    o.pass = o.pass && ok == 100;
                    o.detail << "L2 G=" << G << " n=" << n << " " << ok << "/100 shift " << fmt("%.0e", shift) << "; ";
                }
        }

        void delays(Outcome &o)
        {
            const PropagationDelays configs[] = {{0, 1, 0, 2}, {3, 4, 6, 8}, {6, 1, 3, 5}, {9, 7, 0, 2}, {12, 10, 15, 14}};
            for (const auto &T : configs)
            {
                const DelaySimulation sim = simulate({T, 300});
                const ThroughputReport rep = throughput(sim);
                bool per = true;
                for (const auto &q : rep.per_message)
                    per = per && q == make_rational(1, 3);
                bool residues = true;
                for (const auto &receiver : sim.slots)
                {
                    std::set<long> intf, des;
                    for (const auto &[slot, arrivals] : receiver)
                        for (const auto &a : arrivals)
                            (a.role == ArrivalRole::interference ? intf : des).insert(slot % 3);
                    residues = residues && intf.size() == 1 && des.size() == 2;
                }
                const bool ok = rep.total == make_rational(4, 3) && per && rep.collisions == 0 && residues;
                o.pass = o.pass && ok;
                o.detail << "(" << T.T11 << "," << T.T12 << "," << T.T21 << "," << T.T22 << ") " << to_string(rep.total)
                         << (ok ? " ok" : " FAIL") << "; ";
            }
        }

        void relay(Outcome &o)
        {
            int grid_bad = 0;
            for (int M = 1; M <= 8; ++M)
                for (int K = 1; K <= 8; ++K)
                    if (!same(relay_dof(M, K), oracle::Fraction(M * K, 2 * (M + K - 1))))
                        ++grid_bad;
            const bool limit = to_double(relay_dof(2, 1000)) > 0.999;
            o.detail << "grid mismatches " << grid_bad << ", (2,1000) " << (limit ? "> 0.999" : "<= 0.999") << "; ";

            RelayOptions perfect;
            perfect.scheme = SchemeChoice::perfect;
            perfect.seed = derive_seed(base_seed, "acceptance.relay.perfect");
            const auto p = compose_two_hop(make_relay_topology(2, 2, perfect), perfect);
            const bool p_ok = p.pass && p.end_to_end == make_rational(2, 3) && p.end_to_end == relay_dof(2, 2);
            o.detail << "perfect (2,2) " << to_string(p.end_to_end) << "; ";

            bool general_ok = true;
            for (const auto &[M, K, top] : {std::tuple{2, 2, 3}, std::tuple{2, 3, 2}, std::tuple{3, 2, 2}})
            {
                Rational prev(0);
                o.detail << "(" << M << "," << K << ")";
                for (int n = 1; n <= top; ++n)
                {
                    RelayOptions opt;
                    opt.order = n;
                    opt.seed = derive_seed(base_seed, "acceptance.relay.general", M * 100 + K * 10 + n);
                    const auto c = compose_two_hop(make_relay_topology(M, K, opt), opt);
                    general_ok = general_ok && c.pass && prev < c.end_to_end && c.end_to_end < relay_dof(M, K);
                    prev = c.end_to_end;
                    o.detail << " " << to_string(c.end_to_end);
                }
                o.detail << " < " << to_string(relay_dof(M, K)) << "; ";
            }
            o.pass = grid_bad == 0 && limit && p_ok && general_ok;
        }

        struct Entry
        {
            const char *title;
            double budget;
            std::function<void(Outcome &)> body;
        };

        const Entry &entry(int id)
        {
            static const Entry table[criterion_count] = {
                {"outerbound values", 1.0, outerbound},
                {"perfect Mx2 alignment", 10.0, perfect_mx2},
                {"reciprocity 2xM", 0.0, reciprocity},
                {"general partial alignment", 60.0, general},
                {"DoF slope and O(1) gap", 120.0, slopes},
                {"monomial rank and subspace pairs", 0.0, lemmas},
                {"delay example", 0.0, delays},
                {"relay composition", 0.0, relay},
            };
            if (id < 1 || id > criterion_count)
                throw ParameterError("criterion id must be in 1.." + std::to_string(criterion_count));
            return table[id - 1];
        }
    }

    CriterionResult run_criterion(int id)
    {
        const Entry &e = entry(id);
        CriterionResult r;
        r.id = id;
        r.title = e.title;
        r.budget_seconds = e.budget;

        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try
        {
            e.body(o);
        }
        catch (const std::exception &ex)
        {
            o.pass = false;
            o.detail << "exception: " << ex.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.pass = o.pass;
        r.detail = o.detail.str();
        if (r.budget_seconds > 0.0 && r.seconds > r.budget_seconds)
        {
            r.pass = false;
            r.detail += " over runtime budget";
        }
        return r;
    }

    std::string format_line(const CriterionResult &r)
    {
        std::string line = std::string(r.pass ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + "  " + r.title + " | " +
                           r.detail + " | " + fmt("%.2f s", r.seconds);
        if (r.budget_seconds > 0.0)
            line += " (budget " + fmt("%.0f s", r.budget_seconds) + ")";
        return line;
    }

    std::vector<CriterionResult> run_suite(std::ostream &out, const std::vector<int> &ids)
    {
        std::vector<int> todo = ids;
        if (todo.empty())
            for (int i = 1; i <= criterion_count; ++i)
                todo.push_back(i);
        std::vector<CriterionResult> results;
        for (int id : todo)
        {
            results.push_back(run_criterion(id));
            out << format_line(results.back()) << "\n" << std::flush;
        }
        return results;
    }
}
