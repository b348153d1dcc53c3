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

#include "xnet/dof_region.hpp"

#include "xnet/errors.hpp"
#include "xnet/simplex.hpp"

#include <algorithm>

namespace xnet
{
    DofRegionSpec DofRegionSpec::single_antenna(int M, int N)
    {
        DofRegionSpec s;
        s.M = M;
        s.N = N;
        s.tx_antennas.assign(std::max(M, 0), 1);
        s.rx_antennas.assign(std::max(N, 0), 1);
        return s;
    }

    void DofRegionSpec::validate() const
    {
        if (M < 1 || N < 1)
            throw ParameterError("DoF region needs M, N >= 1");
        if (tx_antennas.size() != static_cast<std::size_t>(M) || rx_antennas.size() != static_cast<std::size_t>(N))
            throw ParameterError("antenna lists must have M and N entries");
        if (std::ranges::any_of(tx_antennas, [](int a) { return a < 1; }) ||
            std::ranges::any_of(rx_antennas, [](int a) { return a < 1; }))
            throw ParameterError("antenna counts must be >= 1");
        for (auto [j, i] : null_mask)
            if (j < 1 || j > N || i < 1 || i > M)
                throw ParameterError("null-mask entry outside {1..N} x {1..M}");
    }

    LinearProgram region_constraints(const DofRegionSpec &spec, std::vector<Rational> objective)
    {
        spec.validate();
        const int M = spec.M;
        const int N = spec.N;
        LinearProgram lp;
        lp.num_vars = M * N;

        for (int m = 1; m <= M; ++m)
            for (int n = 1; n <= N; ++n)
            {
                LinearConstraint row;
                row.coeffs.assign(lp.num_vars, Rational(0));
                for (int q = 1; q <= N; ++q)
                    row.coeffs[dof_index(M, q, m)] += 1;
                for (int p = 1; p <= M; ++p)
                    row.coeffs[dof_index(M, n, p)] += 1;
                row.coeffs[dof_index(M, n, m)] -= 1;
                row.rhs = std::max(spec.tx_antennas[m - 1], spec.rx_antennas[n - 1]);
                lp.constraints.push_back(std::move(row));
            }

        for (auto [j, i] : spec.null_mask)
            lp.pinned_zero.push_back(dof_index(M, j, i));

        if (objective.empty())
        {
            lp.objective.assign(lp.num_vars, Rational(1));
            for (int v : lp.pinned_zero)
                lp.objective[v] = 0;
        }
        else
        {
            if (objective.size() != static_cast<std::size_t>(lp.num_vars))
                throw ParameterError("objective needs one weight per message");
            lp.objective = std::move(objective);
        }
        return lp;
    }

    namespace
    {
        template <class Scalar, class Sign, class Convert>
        LpSolution<Scalar> solve_reduced(const LinearProgram &lp, Sign sign, Convert convert)
        {
            if (lp.objective.size() != static_cast<std::size_t>(lp.num_vars))
                throw ParameterError("objective size mismatch");
            std::vector<bool> pinned(lp.num_vars, false);
            for (int v : lp.pinned_zero)
            {
                if (v < 0 || v >= lp.num_vars)
                    throw ParameterError("pinned variable out of range");
                pinned[v] = true;
            }
            std::vector<int> free_vars;
            for (int v = 0; v < lp.num_vars; ++v)
                if (!pinned[v])
                    free_vars.push_back(v);

            std::vector<Scalar> c;
            for (int v : free_vars)
                c.push_back(convert(lp.objective[v]));
            std::vector<std::vector<Scalar>> A;
            std::vector<Scalar> b;
            for (const auto &row : lp.constraints)
            {
                if (row.coeffs.size() != static_cast<std::size_t>(lp.num_vars))
                    throw ParameterError("constraint size mismatch");
                std::vector<Scalar> r;
                for (int v : free_vars)
                    r.push_back(convert(row.coeffs[v]));
                A.push_back(std::move(r));
                b.push_back(convert(row.rhs));
            }

            auto reduced = detail::simplex_maximize<Scalar>(c, A, b, sign);
            LpSolution<Scalar> out;
            out.status = reduced.status;
            if (out.status != LpStatus::optimal)
                return out;
            out.value = reduced.value;
            out.binding = std::move(reduced.binding);
            out.optimizer.assign(lp.num_vars, Scalar(0));
            for (std::size_t k = 0; k < free_vars.size(); ++k)
                out.optimizer[free_vars[k]] = reduced.optimizer[k];
            return out;
        }
    }

    LpSolution<Rational> solve_lp(const LinearProgram &lp)
    {
        return solve_reduced<Rational>(lp, detail::ExactSign<Rational>{}, [](const Rational &q) { return q; });
    }

    LpSolution<double> solve_lp_approx(const LinearProgram &lp, double tol)
    {
        if (!(tol > 0.0))
            throw ParameterError("tolerance must be positive");
        return solve_reduced<double>(lp, detail::ToleranceSign{tol}, [](const Rational &q) { return q.get_d(); });
    }

    Rational total_dof_bound(int M, int N)
    {
        if (M < 1 || N < 1)
            throw ParameterError("total_dof_bound needs M, N >= 1");
        return make_rational(static_cast<long>(M) * N, M + N - 1);
    }

    Rational mimo_innerbound_formula(int M, int N, int A)
    {
        if (M < 1 || N < 1 || A < 1)
            throw ParameterError("mimo_innerbound_formula needs M, N, A >= 1");
        // A M N / (M + N - 1/A) = A^2 M N / (A (M + N) - 1)
        return make_rational(static_cast<long>(A) * A * M * N, static_cast<long>(A) * (M + N) - 1);
    }
}
