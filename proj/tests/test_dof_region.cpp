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

#include "vertex_oracle.hpp"
#include "xnet/dof_region.hpp"
#include "xnet/errors.hpp"
#include "xnet/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace xnet;

namespace
{
    Rational from(const oracle::Fraction &f)
    {
        return make_rational(static_cast<long>(f.numerator()), static_cast<long>(f.denominator()));
    }

    DofRegionSpec null_diagonal_3x3()
    {
        DofRegionSpec spec = DofRegionSpec::single_antenna(3, 3);
        for (int k = 1; k <= 3; ++k)
            spec.null_mask.insert({k, k});
        return spec;
    }

    Rational evaluate(const std::vector<Rational> &a, const std::vector<Rational> &x)
    {
        Rational s(0);
        for (std::size_t k = 0; k < a.size(); ++k)
            s += a[k] * x[k];
        return s;
    }
}

TEST(RegionConstraints, TwoByTwo)
{
    const LinearProgram lp = region_constraints(DofRegionSpec::single_antenna(2, 2));
    ASSERT_EQ(lp.num_vars, 4);
    ASSERT_EQ(lp.constraints.size(), 4u);
    int row = 0;
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n, ++row)
        {
            const auto &c = lp.constraints[row];
            EXPECT_EQ(c.rhs, 1);
            for (int j = 1; j <= 2; ++j)
                for (int i = 1; i <= 2; ++i)
                    EXPECT_EQ(c.coeffs[dof_index(2, j, i)], (i == m || j == n) ? 1 : 0) << m << n << j << i;
        }
}

TEST(RegionConstraints, PointToPoint)
{
    const LinearProgram lp = region_constraints(DofRegionSpec::single_antenna(1, 1));
    ASSERT_EQ(lp.constraints.size(), 1u);
    EXPECT_EQ(lp.constraints[0].coeffs[0], 1);
    EXPECT_EQ(lp.constraints[0].rhs, 1);
}

TEST(RegionConstraints, NullDiagonal)
{
    const LinearProgram lp = region_constraints(null_diagonal_3x3());
    EXPECT_EQ(lp.constraints.size(), 9u);
    EXPECT_EQ(lp.num_vars - static_cast<int>(lp.pinned_zero.size()), 6);
    for (int k = 1; k <= 3; ++k)
        EXPECT_EQ(lp.objective[dof_index(3, k, k)], 0);
}

TEST(RegionConstraints, AntennaMaximum)
{
    DofRegionSpec spec = DofRegionSpec::single_antenna(2, 2);
    spec.tx_antennas = {3, 1};
    spec.rx_antennas = {1, 2};
    const LinearProgram lp = region_constraints(spec);
    EXPECT_EQ(lp.constraints[0].rhs, 3); // (m=1, n=1)
    EXPECT_EQ(lp.constraints[1].rhs, 3); // (m=1, n=2)
    EXPECT_EQ(lp.constraints[2].rhs, 1); // (m=2, n=1)
    EXPECT_EQ(lp.constraints[3].rhs, 2); // (m=2, n=2)
}

TEST(RegionConstraints, InvalidSpec)
{
    DofRegionSpec spec = DofRegionSpec::single_antenna(2, 2);
    spec.tx_antennas[0] = 0;
    EXPECT_THROW(region_constraints(spec), ParameterError);
    spec = DofRegionSpec::single_antenna(2, 2);
    spec.null_mask.insert({3, 1});
    EXPECT_THROW(region_constraints(spec), ParameterError);
    EXPECT_THROW(region_constraints(DofRegionSpec::single_antenna(2, 2), {1, 1}), ParameterError);
}

TEST(SolveLp, TwoByTwoSum)
{
    const auto sol = solve_lp(region_constraints(DofRegionSpec::single_antenna(2, 2)));
    EXPECT_EQ(sol.status, LpStatus::optimal);
    EXPECT_EQ(sol.value, make_rational(4, 3));
}

TEST(SolveLp, NullDiagonalMatchesOracle)
{
    const auto sol = solve_lp(region_constraints(null_diagonal_3x3()));
    const auto ref = oracle::max_over_vertices(oracle::x_network_polytope(3, 3, {{1, 1}, {2, 2}, {3, 3}}));
    EXPECT_EQ(sol.value, from(ref.value));
    EXPECT_EQ(sol.value, make_rational(3, 2));
}

TEST(SolveLp, SymmetricPointIsOptimalForNullDiagonal)
{
    const LinearProgram lp = region_constraints(null_diagonal_3x3());
    std::vector<Rational> d(9, make_rational(1, 4));
    for (int k = 1; k <= 3; ++k)
        d[dof_index(3, k, k)] = 0;
    for (const auto &c : lp.constraints)
        EXPECT_LE(evaluate(c.coeffs, d), c.rhs);
    EXPECT_EQ(evaluate(lp.objective, d), solve_lp(lp).value);
}

TEST(SolveLp, SingleMessage)
{
    for (int M = 1; M <= 4; ++M)
        for (int N = 1; N <= 4; ++N)
        {
            std::vector<Rational> w(M * N, Rational(0));
            w[dof_index(M, 1, 1)] = 1;
            EXPECT_EQ(solve_lp(region_constraints(DofRegionSpec::single_antenna(M, N), w)).value, 1);
        }
}

TEST(SolveLp, OptimizerFeasibleAndBindingTight)
{
    const LinearProgram lp = region_constraints(DofRegionSpec::single_antenna(3, 4));
    const auto sol = solve_lp(lp);
    for (std::size_t r = 0; r < lp.constraints.size(); ++r)
    {
        const Rational lhs = evaluate(lp.constraints[r].coeffs, sol.optimizer);
        EXPECT_LE(lhs, lp.constraints[r].rhs);
        const bool binding = std::find(sol.binding.begin(), sol.binding.end(), static_cast<int>(r)) != sol.binding.end();
        EXPECT_EQ(binding, lhs == lp.constraints[r].rhs);
    }
    for (const auto &x : sol.optimizer)
        EXPECT_GE(x, 0);
}

TEST(SolveLp, TotalBoundExhaustive)
{
    for (int M = 1; M <= 6; ++M)
        for (int N = 1; N <= 6; ++N)
            EXPECT_EQ(solve_lp(region_constraints(DofRegionSpec::single_antenna(M, N))).value,
                      make_rational(M * N, M + N - 1))
                << M << "x" << N;
}

TEST(SolveLp, VertexOracleSmallNetworks)
{
    for (int M = 1; M <= 9; ++M)
        for (int N = 1; M * N <= 9; ++N)
        {
            const auto ref = oracle::max_over_vertices(oracle::x_network_polytope(M, N));
            EXPECT_EQ(solve_lp(region_constraints(DofRegionSpec::single_antenna(M, N))).value, from(ref.value))
                << M << "x" << N;
        }
}

TEST(SolveLp, PermutationInvariance)
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> weight(0, 5);
    for (int M = 2; M <= 3; ++M)
        for (int N = 2; N <= 3; ++N)
        {
            std::vector<Rational> w(M * N);
            for (auto &x : w)
                x = weight(rng);
            std::vector<int> perm(M);
            std::iota(perm.begin(), perm.end(), 1);
            std::shuffle(perm.begin(), perm.end(), rng);

            // Transmitter i of the original network becomes transmitter perm[i-1].
            std::vector<Rational> wp(M * N);
            for (int j = 1; j <= N; ++j)
                for (int i = 1; i <= M; ++i)
                    wp[dof_index(M, j, perm[i - 1])] = w[dof_index(M, j, i)];
            const auto spec = DofRegionSpec::single_antenna(M, N);
            const auto a = solve_lp(region_constraints(spec, w));
            const LinearProgram lpp = region_constraints(spec, wp);
            const auto b = solve_lp(lpp);
            EXPECT_EQ(a.value, b.value);

            std::vector<Rational> xp(M * N);
            for (int j = 1; j <= N; ++j)
                for (int i = 1; i <= M; ++i)
                    xp[dof_index(M, j, perm[i - 1])] = a.optimizer[dof_index(M, j, i)];
            for (const auto &c : lpp.constraints)
                EXPECT_LE(evaluate(c.coeffs, xp), c.rhs);
            EXPECT_EQ(evaluate(wp, xp), b.value);
        }
}

TEST(SolveLp, RelaxationMonotone)
{
    for (int M = 1; M <= 3; ++M)
        for (int N = 1; N <= 3; ++N)
        {
            const LinearProgram lp = region_constraints(DofRegionSpec::single_antenna(M, N));
            const Rational base = solve_lp(lp).value;
            for (std::size_t r = 0; r < lp.constraints.size(); ++r)
            {
                LinearProgram relaxed = lp;
                relaxed.constraints.erase(relaxed.constraints.begin() + r);
                const auto sol = solve_lp(relaxed);
                    if (sol.status == LpStatus::optimal)
                    {
                        EXPECT_GE(sol.value, base);
                    }
            }
        }
}

TEST(SolveLp, ApproxAgreesWithExact)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> weight(1, 9);
    for (int M = 2; M <= 4; ++M)
        for (int N = 2; N <= 4; ++N)
        {
            std::vector<Rational> w(M * N);
            for (auto &x : w)
                x = make_rational(weight(rng), weight(rng));
            const LinearProgram lp = region_constraints(DofRegionSpec::single_antenna(M, N), w);
            const auto exact = solve_lp(lp);
            const auto approx = solve_lp_approx(lp);
            EXPECT_NEAR(approx.value, to_double(exact.value), 1e-9);
            for (const auto &c : lp.constraints)
            {
                double lhs = 0.0;
                for (int v = 0; v < lp.num_vars; ++v)
                    lhs += to_double(c.coeffs[v]) * approx.optimizer[v];
                EXPECT_LE(lhs, to_double(c.rhs) + 1e-9);
            }
        }
}

TEST(Simplex, SmallProblemAndUnbounded)
{
    using detail::ExactSign;
    using detail::simplex_maximize;
    // max 3x + 2y  s.t. x + y <= 4, x + 3y <= 6, x <= 3   -> (3, 1), value 11
    const std::vector<Rational> c{3, 2};
    const std::vector<std::vector<Rational>> A{{1, 1}, {1, 3}, {1, 0}};
    const std::vector<Rational> b{4, 6, 3};
    const auto s = simplex_maximize<Rational>(c, A, b, ExactSign<Rational>{});
    EXPECT_EQ(s.status, LpStatus::optimal);
    EXPECT_EQ(s.value, 11);
    EXPECT_EQ(s.optimizer[0], 3);
    EXPECT_EQ(s.optimizer[1], 1);

    const auto u = simplex_maximize<Rational>({1, 1}, {{1, -1}}, {1}, ExactSign<Rational>{});
    EXPECT_EQ(u.status, LpStatus::unbounded);
    EXPECT_THROW(simplex_maximize<Rational>({1}, {{1}}, {-1}, ExactSign<Rational>{}), ParameterError);
}

TEST(Bounds, TotalDof)
{
    EXPECT_EQ(total_dof_bound(2, 2), make_rational(4, 3));
    EXPECT_EQ(total_dof_bound(5, 5), make_rational(25, 9));
    for (int N = 1; N <= 8; ++N)
        EXPECT_EQ(total_dof_bound(1, N), 1);
    EXPECT_THROW(total_dof_bound(0, 2), ParameterError);
}

TEST(Bounds, MimoFormula)
{
    EXPECT_EQ(mimo_innerbound_formula(2, 2, 1), make_rational(4, 3));
    // Printed form evaluated directly: 2*2*2 / (2 + 2 - 1/2) = 8 / 3.5.
    EXPECT_DOUBLE_EQ(to_double(mimo_innerbound_formula(2, 2, 2)), 8.0 / 3.5);
    EXPECT_EQ(mimo_innerbound_formula(2, 2, 2), make_rational(16, 7));
    for (int M = 1; M <= 4; ++M)
        for (int N = 1; N <= 4; ++N)
            for (int A = 1; A <= 5; ++A)
                EXPECT_DOUBLE_EQ(to_double(mimo_innerbound_formula(M, N, A)), A * M * N / (M + N - 1.0 / A));
    EXPECT_THROW(mimo_innerbound_formula(2, 2, 0), ParameterError);
}
