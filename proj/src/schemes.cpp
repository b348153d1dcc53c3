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

#include "xnet/schemes.hpp"

#include "xnet/alignment_core.hpp"
#include "xnet/errors.hpp"

#include <Eigen/LU>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <string>

namespace xnet
{
    namespace
    {
        long ipow(long b, int e)
        {
            long p = 1;
            while (e-- > 0)
                p *= b;
            return p;
        }

        Eigen::MatrixXd hcat(const std::vector<Eigen::MatrixXd> &blocks, Eigen::Index rows)
        {
            Eigen::Index cols = 0;
            for (const auto &b : blocks)
                cols += b.cols();
            Eigen::MatrixXd out(rows, cols);
            Eigen::Index c = 0;
            for (const auto &b : blocks)
            {
                out.middleCols(c, b.cols()) = b;
                c += b.cols();
            }
            return out;
        }

        Eigen::MatrixXd apply(const Eigen::VectorXd &h, const Eigen::MatrixXd &V)
        {
            return h.asDiagonal() * V;
        }

        void check_dimensions(const BeamformingPlan &plan, const ExtendedChannel &ext)
        {
            if (ext.transmitters() != plan.M || ext.receivers() != plan.N || ext.length() != plan.mu)
                throw ParameterError("plan dimensions (" + std::to_string(plan.M) + "x" + std::to_string(plan.N) +
                                     ", mu " + std::to_string(plan.mu) + ") do not match the channel");
        }

        /// Desired columns and interference handling at one receiver.
        struct ReceiverView
        {
            Eigen::MatrixXd desired;
            Eigen::MatrixXd interference;
            Eigen::MatrixXd reference; ///< basis the interference is expected to lie in
            double residual = 0.0;
        };

        ReceiverView receiver_view(const BeamformingPlan &plan, const ExtendedChannel &ext, int k)
        {
            const int mu = plan.mu;
            std::vector<Eigen::MatrixXd> desired, interference, reference;
            for (int i = 1; i <= plan.M; ++i)
                desired.push_back(apply(ext.gain(k, i), plan.beams(k, i)));
            for (int j = 1; j <= plan.N; ++j)
            {
                if (j == k)
                    continue;
                for (int i = 1; i <= plan.M; ++i)
                    interference.push_back(apply(ext.gain(k, i), plan.beams(j, i)));
                reference.push_back(apply(ext.gain(k, 1), plan.beams(j, 1)));
            }

            ReceiverView view;
            view.desired = hcat(desired, mu);
            view.interference = hcat(interference, mu);
            const Eigen::Index expected = mu - view.desired.cols();

            if (!plan.dual)
            {
                view.reference = hcat(reference, mu);
                view.residual = span_residual(view.interference, view.reference);
            }
            else if (view.interference.cols() == 0 || expected <= 0)
            {
                view.reference.resize(mu, 0);
                view.residual = view.interference.cols() == 0 ? 0.0 : 1.0;
            }
            else
            {
                Eigen::JacobiSVD<Eigen::MatrixXd> svd(view.interference, Eigen::ComputeThinU);
                const auto &s = svd.singularValues();
                const Eigen::Index r = std::min<Eigen::Index>(expected, s.size());
                view.reference = svd.matrixU().leftCols(r);
                view.residual = (r < s.size() && s(0) > 0.0) ? s(r) / s(0) : 0.0;
            }
            return view;
        }

        Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd &A)
        {
            Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
            return qr.householderQ() * Eigen::MatrixXd::Identity(A.rows(), A.cols());
        }
    }

    int BeamformingPlan::index(int rx, int tx) const
    {
        if (rx < 1 || rx > N || tx < 1 || tx > M)
            throw RangeError("message (" + std::to_string(rx) + "," + std::to_string(tx) + ") outside the plan");
        return (rx - 1) * M + (tx - 1);
    }

    const Eigen::MatrixXd &BeamformingPlan::zero_forcers(int rx, int tx) const
    {
        if (U.empty())
            throw StateError("plan has no zero-forcing vectors");
        return U[index(rx, tx)];
    }

    int BeamformingPlan::desired_streams(int rx) const
    {
        int d = 0;
        for (int i = 1; i <= M; ++i)
            d += streams(rx, i);
        return d;
    }

    int BeamformingPlan::total_streams() const
    {
        int s = 0;
        for (const auto &v : V)
            s += static_cast<int>(v.cols());
        return s;
    }

    std::string BeamformingPlan::name() const
    {
        if (kind == SchemeKind::perfect_mx2)
            return dual ? "reciprocal_2xM" : "perfect_Mx2";
        const std::string base = "general_partial(" + std::to_string(order) + ")";
        return dual ? "reciprocal_" + base : base;
    }

    Rational achieved_dof(const BeamformingPlan &plan)
    {
        if (plan.mu < 1)
            throw ParameterError("plan has no extension length");
        return make_rational(plan.total_streams(), plan.mu);
    }

    BeamformingPlan build_mx2(const ExtendedChannel &ext, std::uint64_t seed, ChannelBounds bounds)
    {
        const int M = ext.transmitters();
        if (ext.receivers() != 2)
            throw ParameterError("build_mx2 needs exactly 2 receivers");
        if (ext.length() != M + 1)
            throw ParameterError("build_mx2 needs an extension of length M+1 = " + std::to_string(M + 1));

        BeamformingPlan plan;
        plan.M = M;
        plan.N = 2;
        plan.mu = M + 1;
        plan.kind = SchemeKind::perfect_mx2;
        plan.V.resize(2 * M);

        const Eigen::VectorXd v11 = BoundedSampler(derive_seed(seed, "mx2.beam", 1), bounds).vector(plan.mu);
        const Eigen::VectorXd v21 = BoundedSampler(derive_seed(seed, "mx2.beam", 2), bounds).vector(plan.mu);
        plan.V[plan.index(1, 1)] = v11;
        plan.V[plan.index(2, 1)] = v21;

        const Eigen::VectorXd a1 = ext.gain(1, 1).cwiseProduct(v21); // aligned interference at receiver 1
        const Eigen::VectorXd a2 = ext.gain(2, 1).cwiseProduct(v11); // aligned interference at receiver 2
        for (int m = 2; m <= M; ++m)
        {
            plan.V[plan.index(2, m)] = a1.cwiseQuotient(ext.gain(1, m));
            plan.V[plan.index(1, m)] = a2.cwiseQuotient(ext.gain(2, m));
        }
        return plan;
    }

    int general_gamma(int M, int N)
    {
        if (M < 1 || N < 1)
            throw ParameterError("network needs M, N >= 1");
        return (M - 1) * (N - 1);
    }

    int general_extension_length(int M, int N, int n)
    {
        const int G = general_gamma(M, N);
        if (n < 1)
            throw ParameterError("alignment order must be >= 1");
        const long mu = N * ipow(n + 1, G) + (M - 1) * ipow(n, G);
        if (mu > 1'000'000)
            throw ParameterError("extension length " + std::to_string(mu) + " is beyond the supported size");
        return static_cast<int>(mu);
    }

    Rational general_dof_formula(int M, int N, int n)
    {
        const int G = general_gamma(M, N);
        const long mu = general_extension_length(M, N, n);
        const long streams = N * ipow(n + 1, G) + static_cast<long>(M - 1) * N * ipow(n, G);
        return make_rational(streams, mu);
    }

    BeamformingPlan build_general(int M, int N, int n, const ExtendedChannel &ext, std::uint64_t seed,
                                  const GeneralOptions &options)
    {
        const int G = general_gamma(M, N);
        const int mu = general_extension_length(M, N, n);
        if (ext.transmitters() != M || ext.receivers() != N)
            throw ParameterError("channel is not " + std::to_string(M) + "x" + std::to_string(N));
        if (ext.length() != mu)
            throw ParameterError("general plan needs an extension of length " + std::to_string(mu) + ", got " +
                                 std::to_string(ext.length()));

        BeamformingPlan plan;
        plan.M = M;
        plan.N = N;
        plan.mu = mu;
        plan.kind = SchemeKind::general_partial;
        plan.order = n;
        plan.V.resize(static_cast<std::size_t>(M) * N);

        for (int k = 1; k <= N; ++k)
        {
            const Eigen::VectorXd w = BoundedSampler(derive_seed(seed, "general.seed", k), options.bounds).vector(mu);
            Eigen::MatrixXd wide, narrow;
            if (G == 0)
            {
                wide = w / w.norm();
                narrow = wide;
            }
            else
            {
                std::vector<Eigen::VectorXd> gens;
                for (int j = 1; j <= N; ++j)
                    for (int i = 2; i <= M; ++i)
                        if (j != k)
                            gens.push_back(ext.gain(j, i).cwiseQuotient(ext.gain(j, 1)));
                const SubspacePair pair = build_subspace_pair(gens, w, n);
                wide = pair.Vp;
                narrow = pair.V;
            }
            if (options.basis == StreamBasis::orthonormal)
            {
                wide = orthonormal_basis(wide);
                narrow = orthonormal_basis(narrow);
            }
            plan.V[plan.index(k, 1)] = wide;
            for (int i = 2; i <= M; ++i)
                plan.V[plan.index(k, i)] = narrow;
        }
        return plan;
    }

    void compute_zero_forcing(BeamformingPlan &plan, const ExtendedChannel &ext, double rank_tol)
    {
        check_dimensions(plan, ext);
        std::vector<Eigen::MatrixXd> U(plan.V.size());
        for (int k = 1; k <= plan.N; ++k)
        {
            const ReceiverView view = receiver_view(plan, ext, k);
            Eigen::MatrixXd lambda(plan.mu, view.desired.cols() + view.reference.cols());
            lambda << view.desired, view.reference;
            if (lambda.cols() != plan.mu)
                throw RankFailure(k, 0.0,
                                  "receiver " + std::to_string(k) + ": Lambda is " + std::to_string(plan.mu) + "x" +
                                      std::to_string(lambda.cols()) + ", not square");
            const RankReport rank = numeric_rank(lambda, rank_tol);
            if (rank.rank < plan.mu)
                throw RankFailure(k, rank.min_over_max,
                                  "receiver " + std::to_string(k) + ": Lambda is rank deficient (ratio " +
                                      std::to_string(rank.min_over_max) + ")");
            const Eigen::MatrixXd inv = lambda.partialPivLu().inverse();

            Eigen::Index row = 0;
            for (int i = 1; i <= plan.M; ++i)
            {
                const int s = plan.streams(k, i);
                U[plan.index(k, i)] = inv.middleRows(row, s).transpose();
                row += s;
            }
        }
        plan.U = std::move(U);
    }

    AlignmentReport verify_plan(const BeamformingPlan &plan, const ExtendedChannel &ext, const VerifyOptions &options)
    {
        check_dimensions(plan, ext);
        AlignmentReport report;
        report.achieved_dof = achieved_dof(plan);
        bool ok = true;

        for (int k = 1; k <= plan.N; ++k)
        {
            const ReceiverView view = receiver_view(plan, ext, k);
            const int expected = plan.mu - static_cast<int>(view.desired.cols());
            const int dim = view.interference.cols() == 0 ? 0 : numeric_rank(view.interference, options.rank_tol).rank;
            report.interference_dim.push_back(dim);
            report.expected_interference_dim.push_back(expected);
            report.max_alignment_residual = std::max(report.max_alignment_residual, view.residual);

            Eigen::MatrixXd lambda(plan.mu, view.desired.cols() + view.reference.cols());
            lambda << view.desired, view.reference;
            double ratio = 0.0;
            bool full = false;
            if (lambda.cols() > 0)
            {
                const RankReport rank = numeric_rank(lambda, options.rank_tol);
                ratio = rank.min_over_max;
                full = lambda.cols() == plan.mu && rank.rank == plan.mu;
            }
            report.lambda_ratio.push_back(ratio);
            report.lambda_full_rank.push_back(full);
            ok = ok && full && dim == expected;
        }
        ok = ok && report.max_alignment_residual < options.residual_tol;

        if (plan.has_zero_forcing())
        {
            for (int k = 1; k <= plan.N; ++k)
                for (int i = 1; i <= plan.M; ++i)
                {
                    const Eigen::MatrixXd &Uk = plan.zero_forcers(k, i);
                    for (Eigen::Index a = 0; a < Uk.cols(); ++a)
                    {
                        const double nu = Uk.col(a).norm();
                        for (int j = 1; j <= plan.N; ++j)
                            for (int m = 1; m <= plan.M; ++m)
                            {
                                const Eigen::MatrixXd Y = apply(ext.gain(k, m), plan.beams(j, m));
                                for (Eigen::Index b = 0; b < Y.cols(); ++b)
                                {
                                    if (j == k && m == i && b == a)
                                        continue;
                                    const double c = std::abs(Uk.col(a).dot(Y.col(b))) / (nu * Y.col(b).norm());
                                    report.max_cross_gain = std::max(report.max_cross_gain, c);
                                }
                            }
                    }
                }
            ok = ok && report.max_cross_gain < options.residual_tol;
        }
        report.pass = ok;
        return report;
    }

    double perfect_alignment_residual(const BeamformingPlan &plan, const ExtendedChannel &ext)
    {
        check_dimensions(plan, ext);
        if (plan.kind != SchemeKind::perfect_mx2 || plan.dual || plan.N != 2)
            throw ParameterError("perfect_alignment_residual needs a primal M x 2 plan");
        double worst = 0.0;
        for (int r = 1; r <= 2; ++r)
        {
            const int other = 3 - r;
            const Eigen::VectorXd ref = ext.gain(r, 1).cwiseProduct(plan.beams(other, 1).col(0));
            const double scale = ref.cwiseAbs().maxCoeff();
            for (int m = 2; m <= plan.M; ++m)
            {
                const Eigen::VectorXd x = ext.gain(r, m).cwiseProduct(plan.beams(other, m).col(0));
                worst = std::max(worst, (x - ref).cwiseAbs().maxCoeff() / scale);
            }
        }
        return worst;
    }

    BeamformingPlan build_reciprocal(const BeamformingPlan &primal, const ExtendedChannel &ext, const VerifyOptions &options)
    {
        if (!primal.has_zero_forcing())
            throw StateError("reciprocal plan needs a primal with zero-forcing vectors");
        const AlignmentReport report = verify_plan(primal, ext, options);
        if (!report.pass)
            throw StateError("reciprocal plan needs a verified primal (" + primal.name() + " failed verification)");

        BeamformingPlan dual;
        dual.M = primal.N;
        dual.N = primal.M;
        dual.mu = primal.mu;
        dual.kind = primal.kind;
        dual.order = primal.order;
        dual.dual = !primal.dual;
        dual.V.resize(primal.V.size());
        dual.U.resize(primal.U.size());
        for (int i = 1; i <= primal.M; ++i)
            for (int j = 1; j <= primal.N; ++j)
            {
                dual.V[dual.index(i, j)] = primal.U[primal.index(j, i)];
                dual.U[dual.index(i, j)] = primal.V[primal.index(j, i)];
            }
        return dual;
    }

    int scheme_length(const SchemeSpec &spec)
    {
        if (spec.scheme == SchemeChoice::general)
            return general_extension_length(spec.M, spec.N, spec.order);
        if (spec.M < 1 || spec.N < 1)
            throw ParameterError("network needs M, N >= 1");
        if (spec.N == 2)
            return spec.M + 1;
        if (spec.M == 2)
            return spec.N + 1;
        throw ParameterError("perfect alignment is available for M x 2 and 2 x M networks only");
    }

    BeamformingPlan build_plan(const SchemeSpec &spec, const ExtendedChannel &ext, std::uint64_t seed, double rank_tol)
    {
        if (ext.transmitters() != spec.M || ext.receivers() != spec.N)
            throw ParameterError("channel is not " + std::to_string(spec.M) + "x" + std::to_string(spec.N));
        if (ext.length() != scheme_length(spec))
            throw ParameterError("channel extension does not match the scheme length");

        if (spec.scheme == SchemeChoice::general)
        {
            BeamformingPlan plan = build_general(spec.M, spec.N, spec.order, ext, seed, spec.general);
            compute_zero_forcing(plan, ext, rank_tol);
            return plan;
        }
        if (spec.N == 2)
        {
            BeamformingPlan plan = build_mx2(ext, seed, spec.general.bounds);
            compute_zero_forcing(plan, ext, rank_tol);
            return plan;
        }
        const ExtendedChannel rev = ext.reciprocal();
        BeamformingPlan primal = build_mx2(rev, seed, spec.general.bounds);
        compute_zero_forcing(primal, rev, rank_tol);
        return build_reciprocal(primal, rev, {1e-9, rank_tol});
    }
}
