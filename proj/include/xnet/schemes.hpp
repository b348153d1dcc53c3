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

#include "xnet/channel.hpp"
#include "xnet/rational.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

/// Beamforming plans for the X network over a symbol extension.
///
/// Messages are addressed (rx, tx), 1-based; per-message matrices are stored receiver-major
/// at index (rx-1)*M + (tx-1). V holds the transmit directions of the streams of a message,
/// U the matching zero-forcing vectors (same column order).
namespace xnet
{
    enum class SchemeKind
    {
        perfect_mx2,
        general_partial,
    };

    /// Column basis used for the streams of a general plan. Both span the same subspaces;
    /// monomial keeps the raw monomial columns (unit-normalized), orthonormal replaces
    /// each message's columns by a thin-QR basis of their span.
    enum class StreamBasis
    {
        orthonormal,
        monomial,
    };

    struct BeamformingPlan
    {
        int M = 0;
        int N = 0;
        int mu = 0;
        SchemeKind kind = SchemeKind::perfect_mx2;
        bool dual = false; ///< built by build_reciprocal from a primal plan
        int order = 0;     ///< n for general plans, 0 otherwise
        std::vector<Eigen::MatrixXd> V;
        std::vector<Eigen::MatrixXd> U; ///< empty until compute_zero_forcing

        int index(int rx, int tx) const;
        const Eigen::MatrixXd &beams(int rx, int tx) const { return V[index(rx, tx)]; }
        const Eigen::MatrixXd &zero_forcers(int rx, int tx) const;
        int streams(int rx, int tx) const { return static_cast<int>(beams(rx, tx).cols()); }
        int desired_streams(int rx) const;
        int total_streams() const;
        bool has_zero_forcing() const { return !U.empty(); }

        /// perfect_Mx2, reciprocal_2xM, general_partial(n), reciprocal_general_partial(n)
        std::string name() const;
    };

    /// Sigma streams / mu, exact.
    Rational achieved_dof(const BeamformingPlan &plan);

    /// Perfect alignment on the M x 2 network over mu = M+1: v11, v21 drawn from the bounded
    /// law, v2m = (H^[1m])^-1 H^[11] v21 and v1m = (H^[2m])^-1 H^[21] v11 for m >= 2.
    /// Every beam entry l depends only on slot-l channel values.
    BeamformingPlan build_mx2(const ExtendedChannel &ext, std::uint64_t seed, ChannelBounds bounds = {});

    int general_gamma(int M, int N);
    /// mu_n = N (n+1)^G + (M-1) n^G
    int general_extension_length(int M, int N, int n);
    /// (N (n+1)^G + (M-1) N n^G) / mu_n
    Rational general_dof_formula(int M, int N, int n);

    struct GeneralOptions
    {
        StreamBasis basis = StreamBasis::orthonormal;
        ChannelBounds bounds;
    };

    /// Partial alignment on the M x N network over mu_n. For receiver k the pair
    /// (V^[k2], V^[k1]) = (V, V') is built from the generators T^[ji] = (H^[j1])^-1 H^[ji],
    /// j != k, i >= 2, and a bounded random seed column; V^[ki] = V^[k2] for i >= 2.
    BeamformingPlan build_general(int M, int N, int n, const ExtendedChannel &ext, std::uint64_t seed,
                                  const GeneralOptions &options = {});

    /// Fills U from the rows of Lambda_k^-1, Lambda_k = [desired columns | aligned
    /// interference basis]. Throws RankFailure when Lambda_k is not square and full rank
    /// at rank_tol.
    void compute_zero_forcing(BeamformingPlan &plan, const ExtendedChannel &ext, double rank_tol = 1e-9);

    struct VerifyOptions
    {
        double residual_tol = 1e-9;
        double rank_tol = 1e-9;
    };

    struct AlignmentReport
    {
        std::vector<int> interference_dim;     ///< per receiver, numeric rank of all interference
        std::vector<int> expected_interference_dim;
        std::vector<double> lambda_ratio;      ///< per receiver, sigma_min / sigma_max of Lambda_k
        std::vector<bool> lambda_full_rank;
        double max_alignment_residual = 0.0;
        double max_cross_gain = 0.0;           ///< 0 when U is not populated
        Rational achieved_dof;
        bool pass = false;
    };

    /// Alignment residual, interference dimension, Lambda rank and (with U) the normalized
    /// cross gains |u^T H v| / (|u| |H v|) of every non-matching (u, v) pair. Failures are
    /// reported in the result, never thrown.
    AlignmentReport verify_plan(const BeamformingPlan &plan, const ExtendedChannel &ext, const VerifyOptions &options = {});

    /// Largest relative violation of H^[1m] v^[2m] = H^[11] v^[21] and H^[2m] v^[1m] = H^[21] v^[11].
    double perfect_alignment_residual(const BeamformingPlan &plan, const ExtendedChannel &ext);

    /// Dual plan on the reciprocal network: beams and zero-forcers swap roles,
    /// V_dual(i, j) = U(j, i), U_dual(i, j) = V(j, i). The primal must carry U and pass
    /// verify_plan (StateError otherwise). The result lives on ext.reciprocal().
    BeamformingPlan build_reciprocal(const BeamformingPlan &primal, const ExtendedChannel &ext,
                                     const VerifyOptions &options = {});

    enum class SchemeChoice
    {
        perfect,
        general,
    };

    struct SchemeSpec
    {
        SchemeChoice scheme = SchemeChoice::perfect;
        int M = 2;
        int N = 2;
        int order = 1;
        GeneralOptions general;
    };

    /// Extension length the scheme needs.
    int scheme_length(const SchemeSpec &spec);

    /// Plan with U populated. Perfect schemes use build_mx2 when N = 2, otherwise the
    /// reciprocal of an M' x 2 plan built on ext.reciprocal() when M = 2.
    BeamformingPlan build_plan(const SchemeSpec &spec, const ExtendedChannel &ext, std::uint64_t seed,
                               double rank_tol = 1e-9);
}
