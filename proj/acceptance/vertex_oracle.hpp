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

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

/// Brute-force LP oracle: enumerates every basis of the polytope
/// { d >= 0, A d <= b } by solving each square subsystem of tight constraints, keeps the
/// feasible vertices and returns the best objective value. Shares no code with the
/// simplex; arithmetic is exact on a 128-bit fraction type.
namespace xnet::oracle
{
    struct Fraction
    {
        __int128 num = 0;
        __int128 den = 1;

        Fraction() = default;
        Fraction(long long n, long long d = 1) : num(n), den(d) { normalize(); }

        static __int128 gcd(__int128 a, __int128 b)
        {
            if (a < 0)
                a = -a;
            if (b < 0)
                b = -b;
            while (b != 0)
            {
                const __int128 t = a % b;
                a = b;
                b = t;
            }
            return a;
        }

        void normalize()
        {
            if (den == 0)
                throw std::domain_error("fraction with zero denominator");
            if (den < 0)
            {
                num = -num;
                den = -den;
            }
            const __int128 g = gcd(num, den);
            if (g > 1)
            {
                num /= g;
                den /= g;
            }
        }

        friend Fraction operator+(Fraction a, const Fraction &b)
        {
            Fraction r;
            r.num = a.num * b.den + b.num * a.den;
            r.den = a.den * b.den;
            r.normalize();
            return r;
        }
        friend Fraction operator-(Fraction a, const Fraction &b)
        {
            Fraction r;
            r.num = a.num * b.den - b.num * a.den;
            r.den = a.den * b.den;
            r.normalize();
            return r;
        }
        friend Fraction operator*(Fraction a, const Fraction &b)
        {
            Fraction r;
            r.num = a.num * b.num;
            r.den = a.den * b.den;
            r.normalize();
            return r;
        }
        friend Fraction operator/(Fraction a, const Fraction &b)
        {
            if (b.num == 0)
                throw std::domain_error("fraction division by zero");
            Fraction r;
            r.num = a.num * b.den;
            r.den = a.den * b.num;
            r.normalize();
            return r;
        }
        friend bool operator==(const Fraction &a, const Fraction &b) { return a.num == b.num && a.den == b.den; }
        friend bool operator<(const Fraction &a, const Fraction &b) { return a.num * b.den < b.num * a.den; }
        friend bool operator<=(const Fraction &a, const Fraction &b) { return !(b < a); }
        bool is_zero() const { return num == 0; }
        long long numerator() const { return static_cast<long long>(num); }
        long long denominator() const { return static_cast<long long>(den); }
    };

    struct Polytope
    {
        int vars = 0;
        std::vector<std::vector<Fraction>> A; ///< rows of A d <= b
        std::vector<Fraction> b;
        std::vector<Fraction> objective;
    };

    /// Solves the square system S x = r; nullopt when singular.
    inline std::optional<std::vector<Fraction>> solve_square(std::vector<std::vector<Fraction>> S, std::vector<Fraction> r)
    {
        const std::size_t n = r.size();
        for (std::size_t c = 0; c < n; ++c)
        {
            std::size_t p = c;
            while (p < n && S[p][c].is_zero())
                ++p;
            if (p == n)
                return std::nullopt;
            std::swap(S[p], S[c]);
            std::swap(r[p], r[c]);
            for (std::size_t i = 0; i < n; ++i)
            {
                if (i == c || S[i][c].is_zero())
                    continue;
                const Fraction f = S[i][c] / S[c][c];
                for (std::size_t k = c; k < n; ++k)
                    S[i][k] = S[i][k] - f * S[c][k];
                r[i] = r[i] - f * r[c];
            }
        }
        std::vector<Fraction> x(n);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = r[i] / S[i][i];
        return x;
    }

    struct OracleResult
    {
        Fraction value;
        std::vector<Fraction> argmax;
        long vertices = 0;
    };

    /// Maximum of the objective over the vertices of the polytope (assumed bounded and
    /// containing the origin).
    inline OracleResult max_over_vertices(const Polytope &P)
    {
        const int n = P.vars;
        // Rows 0..m-1 are A d <= b, rows m..m+n-1 are -d_v <= 0.
        const int m = static_cast<int>(P.A.size());
        std::vector<std::vector<Fraction>> rows = P.A;
        std::vector<Fraction> rhs = P.b;
        for (int v = 0; v < n; ++v)
        {
            std::vector<Fraction> e(n, Fraction(0));
            e[v] = Fraction(-1);
            rows.push_back(e);
            rhs.push_back(Fraction(0));
        }
        const int total = m + n;

        OracleResult best;
        bool found = false;
        std::vector<int> pick(n);
        std::iota(pick.begin(), pick.end(), 0);
        while (true)
        {
            std::vector<std::vector<Fraction>> S;
            std::vector<Fraction> r;
            for (int i : pick)
            {
                S.push_back(rows[i]);
                r.push_back(rhs[i]);
            }
            if (auto x = solve_square(S, r))
            {
                bool feasible = true;
                for (int i = 0; i < total && feasible; ++i)
                {
                    Fraction lhs(0);
                    for (int v = 0; v < n; ++v)
                        lhs = lhs + rows[i][v] * (*x)[v];
                    feasible = lhs <= rhs[i];
                }
                if (feasible)
                {
                    ++best.vertices;
                    Fraction val(0);
                    for (int v = 0; v < n; ++v)
                        val = val + P.objective[v] * (*x)[v];
                    if (!found || best.value < val)
                    {
                        best.value = val;
                        best.argmax = *x;
                        found = true;
                    }
                }
            }
            int k = n - 1;
            while (k >= 0 && pick[k] == total - n + k)
                --k;
            if (k < 0)
                break;
            ++pick[k];
            for (int j = k + 1; j < n; ++j)
                pick[j] = pick[j - 1] + 1;
        }
        if (!found)
            throw std::logic_error("polytope has no vertex");
        return best;
    }

    /// Single-antenna X-network outerbound written out directly: for transmitter t and
    /// receiver r, every message leaving t or reaching r counts once. Messages in `absent`
    /// (pairs rx, tx, 1-based) are dropped from the variable list; the objective sums the
    /// remaining messages.
    inline Polytope x_network_polytope(int M, int N, const std::vector<std::pair<int, int>> &absent = {})
    {
        std::vector<std::pair<int, int>> msgs; // (rx, tx)
        for (int rx = 1; rx <= N; ++rx)
            for (int tx = 1; tx <= M; ++tx)
            {
                bool gone = false;
                for (const auto &a : absent)
                    gone = gone || (a.first == rx && a.second == tx);
                if (!gone)
                    msgs.emplace_back(rx, tx);
            }
        Polytope P;
        P.vars = static_cast<int>(msgs.size());
        P.objective.assign(P.vars, Fraction(1));
        for (int t = 1; t <= M; ++t)
            for (int r = 1; r <= N; ++r)
            {
                std::vector<Fraction> row(P.vars, Fraction(0));
                for (int v = 0; v < P.vars; ++v)
                    if (msgs[v].second == t || msgs[v].first == r)
                        row[v] = Fraction(1);
                P.A.push_back(row);
                P.b.push_back(Fraction(1));
            }
        return P;
    }
}
