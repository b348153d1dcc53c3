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

#include "xnet/alignment_core.hpp"

#include "xnet/errors.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>
#include <string>

namespace xnet
{
    RankReport numeric_rank(const Eigen::MatrixXd &A, double rel_tol)
    {
        if (!(rel_tol > 0.0 && rel_tol < 1.0))
            throw ParameterError("rank tolerance must lie in (0, 1)");
        if (A.size() == 0)
            throw InputError("numeric_rank of an empty matrix");
        if (!A.allFinite())
            throw InputError("numeric_rank of a matrix with non-finite entries");

        Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
        const auto &s = svd.singularValues();
        RankReport r;
        if (s(0) == 0.0)
            return r;
        for (Eigen::Index k = 0; k < s.size(); ++k)
            if (s(k) >= rel_tol * s(0))
                ++r.rank;
        r.min_over_max = s(s.size() - 1) / s(0);
        return r;
    }

    std::vector<std::vector<int>> monomial_exponents(int size, int variables)
    {
        if (size < 1 || variables < 1)
            throw ParameterError("monomial_exponents needs size, variables >= 1");
        long base = 2;
        auto pow_ge = [&](long b) {
            long p = 1;
            for (int k = 0; k < variables; ++k)
            {
                p *= b;
                if (p > size)
                    return true;
            }
            return false;
        };
        while (!pow_ge(base))
            ++base;

        std::vector<std::vector<int>> e(size, std::vector<int>(variables, 0));
        for (int j = 1; j <= size; ++j)
        {
            long x = j;
            for (int k = 0; k < variables; ++k)
            {
                e[j - 1][k] = static_cast<int>(x % base);
                x /= base;
            }
        }
        return e;
    }

    Eigen::MatrixXd lemma1_matrix(int size, int variables, std::uint64_t seed, ChannelBounds bounds)
    {
        const auto e = monomial_exponents(size, variables);
        BoundedSampler draw(seed, bounds);
        Eigen::MatrixXd X(size, variables);
        for (int i = 0; i < size; ++i)
            for (int k = 0; k < variables; ++k)
                X(i, k) = draw();

        Eigen::MatrixXd A(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j)
            {
                double a = 1.0;
                for (int k = 0; k < variables; ++k)
                    for (int p = 0; p < e[j][k]; ++p)
                        a *= X(i, k);
                A(i, j) = a;
            }
        return A;
    }

    namespace
    {
        long ipow(long b, int e)
        {
            long p = 1;
            while (e-- > 0)
                p *= b;
            return p;
        }

        ExponentTuple tuple_of(int column, int gamma, int base)
        {
            ExponentTuple a(gamma);
            for (int i = gamma - 1; i >= 0; --i)
            {
                a[i] = column % base + 1;
                column /= base;
            }
            return a;
        }

        int column_of(const ExponentTuple &a, int gamma, int base)
        {
            if (static_cast<int>(a.size()) != gamma)
                return -1;
            int c = 0;
            for (int i = 0; i < gamma; ++i)
            {
                if (a[i] < 1 || a[i] > base)
                    return -1;
                c = c * base + (a[i] - 1);
            }
            return c;
        }

        void fill_columns(const std::vector<Eigen::VectorXd> &T, const Eigen::VectorXd &w, int base,
                          Eigen::MatrixXd &cols, Eigen::VectorXd &scale)
        {
            const int gamma = static_cast<int>(T.size());
            const int count = static_cast<int>(ipow(base, gamma));
            cols.resize(w.size(), count);
            scale.resize(count);
            for (int c = 0; c < count; ++c)
            {
                const ExponentTuple a = tuple_of(c, gamma, base);
                Eigen::VectorXd v = w;
                for (int i = 0; i < gamma; ++i)
                    for (int p = 0; p < a[i]; ++p)
                        v.array() *= T[i].array();
                scale(c) = v.norm();
                cols.col(c) = v / scale(c);
            }
        }
    }

    ExponentTuple SubspacePair::exponents_of_V(int column) const { return tuple_of(column, gamma(), order); }
    ExponentTuple SubspacePair::exponents_of_Vp(int column) const { return tuple_of(column, gamma(), order + 1); }
    int SubspacePair::column_in_V(const ExponentTuple &a) const { return column_of(a, gamma(), order); }
    int SubspacePair::column_in_Vp(const ExponentTuple &a) const { return column_of(a, gamma(), order + 1); }

    SubspacePair build_subspace_pair(std::span<const Eigen::VectorXd> generators, const Eigen::VectorXd &w, int n)
    {
        const int gamma = static_cast<int>(generators.size());
        if (gamma < 1)
            throw ParameterError("subspace pair needs at least one generator");
        if (n < 1)
            throw ParameterError("alignment order must be >= 1");
        const long mu = w.size();
        const long wide = ipow(n + 1, gamma);
        if (!(mu > wide))
            throw ParameterError("subspace pair needs mu > (n+1)^G (mu = " + std::to_string(mu) +
                                 ", (n+1)^G = " + std::to_string(wide) + ")");
        if (!w.allFinite() || (w.array() == 0.0).any())
            throw DegeneracyError("seed column must have finite non-zero entries");
        for (const auto &T : generators)
        {
            if (T.size() != mu)
                throw ParameterError("generator size differs from the seed column");
            if (!T.allFinite() || (T.array() == 0.0).any())
                throw DegeneracyError("generator diagonal has a zero entry");
        }

        SubspacePair pair;
        pair.order = n;
        pair.generators.assign(generators.begin(), generators.end());
        pair.seed_column = w;
        fill_columns(pair.generators, w, n, pair.V, pair.V_scale);
        fill_columns(pair.generators, w, n + 1, pair.Vp, pair.Vp_scale);
        return pair;
    }

    double generator_shift_error(const SubspacePair &pair, int index)
    {
        if (index < 0 || index >= pair.gamma())
            throw ParameterError("generator index out of range");
        double worst = 0.0;
        const auto &T = pair.generators[index];
        for (int c = 0; c < pair.V.cols(); ++c)
        {
            ExponentTuple a = pair.exponents_of_V(c);
            a[index] += 1;
            const int target = pair.column_in_Vp(a);
            Eigen::VectorXd x = T.cwiseProduct(pair.V.col(c));
            x /= x.norm();
            worst = std::max(worst, (x - pair.Vp.col(target)).cwiseAbs().maxCoeff());
        }
        return worst;
    }

    double span_residual(const Eigen::MatrixXd &X, const Eigen::MatrixXd &B)
    {
        if (X.rows() != B.rows())
            throw ParameterError("span_residual dimension mismatch");
        if (X.cols() == 0)
            return 0.0;
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(B);
        const Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(B.rows(), B.cols());
        const Eigen::MatrixXd R = X - Q * (Q.transpose() * X);
        double worst = 0.0;
        for (Eigen::Index c = 0; c < X.cols(); ++c)
        {
            const double nx = X.col(c).norm();
            if (nx > 0.0)
                worst = std::max(worst, R.col(c).norm() / nx);
        }
        return worst;
    }

    bool check_containment(const Eigen::VectorXd &T, const SubspacePair &pair, double tol)
    {
        if (T.size() != pair.V.rows())
            throw ParameterError("check_containment dimension mismatch");

        for (int i = 0; i < pair.gamma(); ++i)
            if (pair.generators[i] == T)
            {
                if (generator_shift_error(pair, i) >= tol)
                    return false;
                return span_residual(T.asDiagonal() * pair.V, pair.Vp) < tol;
            }

        for (int c = 0; c < pair.V.cols(); ++c)
        {
            Eigen::VectorXd x = T.cwiseProduct(pair.V.col(c));
            x /= x.norm();
            bool matched = false;
            for (int d = 0; d < pair.Vp.cols() && !matched; ++d)
                matched = (x - pair.Vp.col(d)).cwiseAbs().maxCoeff() < tol;
            if (!matched)
                return false;
        }
        return span_residual(T.asDiagonal() * pair.V, pair.Vp) < tol;
    }
}
