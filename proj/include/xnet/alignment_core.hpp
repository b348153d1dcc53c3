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

#include "xnet/random.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

namespace xnet
{
    struct RankReport
    {
        int rank = 0;
        double min_over_max = 0.0; ///< smallest / largest singular value
    };

    /// Number of singular values >= rel_tol * largest. Throws InputError on empty or
    /// non-finite input, ParameterError if rel_tol is outside (0, 1).
    RankReport numeric_rank(const Eigen::MatrixXd &A, double rel_tol = 1e-9);

    /// Exponent vectors of the columns of a monomial test matrix: column j (1-based) of
    /// row i is prod_k X_ik^{e_jk}, with e_j the base-B digits of j over `variables`
    /// positions (B the smallest base with B^variables > size). Distinct j give distinct
    /// exponent vectors, so every row holds pairwise different monomials. With one
    /// variable this is the Vandermonde-like row [X, X^2, ..., X^size].
    std::vector<std::vector<int>> monomial_exponents(int size, int variables);

    /// size x size matrix with monomial rows as above, variables drawn from the bounded law.
    Eigen::MatrixXd lemma1_matrix(int size, int variables, std::uint64_t seed, ChannelBounds bounds = {});

    using ExponentTuple = std::vector<int>;

    /// Aligned pair (V, V') generated from commuting diagonal matrices T_1..T_G and a
    /// seed column w:
    ///   V  = { (prod_i T_i^{a_i}) w : a in {1..n}^G }
    ///   V' = { (prod_i T_i^{a_i}) w : a in {1..n+1}^G }
    /// Columns are in lexicographic exponent order (a_1 most significant) and are
    /// normalized to unit 2-norm; the removed norms are kept in *_scale so the raw
    /// monomial column is scale(c) * column(c).
    struct SubspacePair
    {
        Eigen::MatrixXd V;
        Eigen::MatrixXd Vp;
        Eigen::VectorXd V_scale;
        Eigen::VectorXd Vp_scale;
        int order = 0;
        std::vector<Eigen::VectorXd> generators; ///< diagonals of T_i
        Eigen::VectorXd seed_column;

        int gamma() const noexcept { return static_cast<int>(generators.size()); }

        ExponentTuple exponents_of_V(int column) const;
        ExponentTuple exponents_of_Vp(int column) const;
        /// Column index of an exponent tuple; -1 if out of range.
        int column_in_V(const ExponentTuple &a) const;
        int column_in_Vp(const ExponentTuple &a) const;
    };

    /// Requires mu > (n+1)^G, n >= 1, G >= 1 and non-zero entries in w and every generator
    /// (DegeneracyError otherwise).
    SubspacePair build_subspace_pair(std::span<const Eigen::VectorXd> generators, const Eigen::VectorXd &w, int n);

    /// Column match: generator `index` maps column a of V onto column a + e_index of V'.
    /// Returns the largest max-abs mismatch between the normalized directions.
    double generator_shift_error(const SubspacePair &pair, int index);

    /// T V < V': every column of T V matches some column of V' (normalized max-abs error
    /// < tol) and T V lies in span(V') with relative least-squares residual < tol.
    /// Generators of the pair are recognised and checked by index arithmetic.
    bool check_containment(const Eigen::VectorXd &T, const SubspacePair &pair, double tol);

    /// Largest relative residual of projecting the columns of X onto span(B).
    double span_residual(const Eigen::MatrixXd &X, const Eigen::MatrixXd &B);
}
