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

#include "xnet/dof_region.hpp"
#include "xnet/errors.hpp"

#include <cstddef>
#include <vector>

namespace xnet::detail
{
    /// Sign tests for the simplex; exact for Rational, tolerance-based for double.
    template <class Scalar>
    struct ExactSign
    {
        bool positive(const Scalar &x) const { return x > 0; }
        bool negative(const Scalar &x) const { return x < 0; }
        bool zero(const Scalar &x) const { return x == 0; }
    };

    struct ToleranceSign
    {
        double tol;
        bool positive(double x) const { return x > tol; }
        bool negative(double x) const { return x < -tol; }
        bool zero(double x) const { return x <= tol && x >= -tol; }
    };

    /// Dense tableau simplex for  max c.x  s.t. A x <= b, x >= 0, b >= 0.
    /// Bland's rule on both the entering and the leaving choice, so degenerate
    /// vertices cannot cycle.
    template <class Scalar, class Sign>
    LpSolution<Scalar> simplex_maximize(const std::vector<Scalar> &c, const std::vector<std::vector<Scalar>> &A,
                                        const std::vector<Scalar> &b, Sign sign)
    {
        const std::size_t n = c.size();
        const std::size_t m = A.size();
        const std::size_t cols = n + m;

        // row i: [A_i | e_i | b_i]; objective row holds reduced costs -c.
        std::vector<std::vector<Scalar>> T(m, std::vector<Scalar>(cols + 1, Scalar(0)));
        std::vector<Scalar> z(cols + 1, Scalar(0));
        std::vector<std::size_t> basis(m);
        for (std::size_t i = 0; i < m; ++i)
        {
            if (sign.negative(b[i]))
                throw ParameterError("simplex needs a non-negative right-hand side");
            for (std::size_t j = 0; j < n; ++j)
                T[i][j] = A[i][j];
            T[i][n + i] = Scalar(1);
            T[i][cols] = b[i];
            basis[i] = n + i;
        }
        for (std::size_t j = 0; j < n; ++j)
            z[j] = -c[j];

        LpSolution<Scalar> sol;
        const std::size_t max_iter = 50 * (cols + 1) * (m + 1);
        for (std::size_t iter = 0;; ++iter)
        {
            if (iter > max_iter)
                throw Error("simplex iteration limit reached");

            std::size_t enter = cols;
            for (std::size_t j = 0; j < cols; ++j)
                if (sign.negative(z[j]))
                {
                    enter = j;
                    break;
                }
            if (enter == cols)
                break;

            std::size_t leave = m;
            Scalar best{};
            for (std::size_t i = 0; i < m; ++i)
            {
                if (!sign.positive(T[i][enter]))
                    continue;
                Scalar ratio = T[i][cols] / T[i][enter];
                if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave]))
                {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m)
            {
                sol.status = LpStatus::unbounded;
                return sol;
            }

            const Scalar piv = T[leave][enter];
            for (auto &v : T[leave])
                v /= piv;
            for (std::size_t i = 0; i < m; ++i)
            {
                if (i == leave || sign.zero(T[i][enter]))
                    continue;
                const Scalar f = T[i][enter];
                for (std::size_t j = 0; j <= cols; ++j)
                    T[i][j] -= f * T[leave][j];
            }
            if (!sign.zero(z[enter]))
            {
                const Scalar f = z[enter];
                for (std::size_t j = 0; j <= cols; ++j)
                    z[j] -= f * T[leave][j];
            }
            basis[leave] = enter;
        }

        sol.status = LpStatus::optimal;
        sol.value = z[cols];
        sol.optimizer.assign(n, Scalar(0));
        std::vector<Scalar> slack(m, Scalar(0));
        for (std::size_t i = 0; i < m; ++i)
        {
            if (basis[i] < n)
                sol.optimizer[basis[i]] = T[i][cols];
            else
                slack[basis[i] - n] = T[i][cols];
        }
        for (std::size_t i = 0; i < m; ++i)
            if (sign.zero(slack[i]))
                sol.binding.push_back(static_cast<int>(i));
        return sol;
    }
}
