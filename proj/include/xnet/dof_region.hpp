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

#include <set>
#include <utility>
#include <vector>

/// Outerbound on the degrees-of-freedom region of the M x N X network and the small
/// linear programs built from it.
///
/// The DoF vector has one entry d_ji per message (receiver j, transmitter i), stored
/// receiver-major: index (j-1)*M + (i-1).
namespace xnet
{
    struct DofRegionSpec
    {
        int M = 1;
        int N = 1;
        std::vector<int> tx_antennas; ///< A^t_i, size M
        std::vector<int> rx_antennas; ///< A^r_j, size N
        std::set<std::pair<int, int>> null_mask; ///< absent messages (rx, tx), 1-based

        static DofRegionSpec single_antenna(int M, int N);
        void validate() const;
    };

    inline int dof_index(int M, int rx, int tx) { return (rx - 1) * M + (tx - 1); }

    struct LinearConstraint
    {
        std::vector<Rational> coeffs;
        Rational rhs;
    };

    /// maximize objective . d  s.t.  constraints (coeffs . d <= rhs), d >= 0, d_v = 0 for v in pinned_zero.
    struct LinearProgram
    {
        int num_vars = 0;
        std::vector<Rational> objective;
        std::vector<LinearConstraint> constraints;
        std::vector<int> pinned_zero;
    };

    enum class LpStatus
    {
        optimal,
        unbounded,
    };

    template <class Scalar>
    struct LpSolution
    {
        LpStatus status = LpStatus::optimal;
        Scalar value{};
        std::vector<Scalar> optimizer;
        std::vector<int> binding; ///< indices of constraints tight at the optimizer
    };

    /// One row per (m, n) in {1..M} x {1..N}, ordered m-major:
    ///   sum_q d_qm + sum_p d_np - d_nm <= max(A^t_m, A^r_n)
    /// i.e. every message leaving transmitter m or arriving at receiver n. Null-mask
    /// messages are pinned to zero. An empty objective means the unweighted sum of the
    /// messages that are present.
    LinearProgram region_constraints(const DofRegionSpec &spec, std::vector<Rational> objective = {});

    /// Exact rational simplex (Bland's rule). Requires rhs >= 0 so the origin is feasible.
    LpSolution<Rational> solve_lp(const LinearProgram &lp);

    /// Same algorithm in double precision with feasibility/optimality tolerance tol.
    LpSolution<double> solve_lp_approx(const LinearProgram &lp, double tol = 1e-9);

    /// MN / (M + N - 1)
    Rational total_dof_bound(int M, int N);

    /// A M N / (M + N - 1/A). Formula only; no scheme reaches it here.
    Rational mimo_innerbound_formula(int M, int N, int A);
}
