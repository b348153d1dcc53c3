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

#include "xnet/link_sim.hpp"

#include "xnet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <tuple>

namespace xnet
{
    namespace
    {
        void check(const BeamformingPlan &plan, const ExtendedChannel &ext, double rho, double noise_var)
        {
            if (ext.transmitters() != plan.M || ext.receivers() != plan.N || ext.length() != plan.mu)
                throw ParameterError("plan and channel dimensions differ");
            if (!(rho >= 0.0) || !std::isfinite(rho))
                throw ParameterError("rho must be finite and non-negative");
            if (!(noise_var >= 0.0) || !std::isfinite(noise_var))
                throw ParameterError("noise variance must be finite and non-negative");
        }

        Eigen::VectorXd unit(const Eigen::VectorXd &v) { return v / v.norm(); }
    }

    double stream_energy(const BeamformingPlan &plan, double rho)
    {
        const int S = plan.total_streams();
        return S == 0 ? 0.0 : rho * plan.mu / S;
    }

    Transmission transmit_receive(const BeamformingPlan &plan, const ExtendedChannel &ext, double rho,
                                  std::uint64_t seed, double noise_var)
    {
        check(plan, ext, rho, noise_var);
        const double amp = std::sqrt(stream_energy(plan, rho));
        std::mt19937_64 symbol_rng(derive_seed(seed, "link.symbols"));
        std::mt19937_64 noise_rng(derive_seed(seed, "link.noise"));
        std::normal_distribution<double> gauss(0.0, 1.0);

        Transmission t;
        t.symbols.resize(plan.V.size());
        t.transmitted.assign(plan.M, Eigen::VectorXd::Zero(plan.mu));
        for (int j = 1; j <= plan.N; ++j)
            for (int i = 1; i <= plan.M; ++i)
            {
                const Eigen::MatrixXd &V = plan.beams(j, i);
                Eigen::VectorXd x(V.cols());
                for (Eigen::Index s = 0; s < V.cols(); ++s)
                {
                    x(s) = gauss(symbol_rng);
                    t.transmitted[i - 1] += amp * x(s) * unit(V.col(s));
                }
                t.symbols[plan.index(j, i)] = x;
            }

        const double sigma = std::sqrt(noise_var);
        for (int j = 1; j <= plan.N; ++j)
        {
            Eigen::VectorXd y = Eigen::VectorXd::Zero(plan.mu);
            for (int i = 1; i <= plan.M; ++i)
                y += ext.gain(j, i).cwiseProduct(t.transmitted[i - 1]);
            for (int r = 0; r < plan.mu; ++r)
                y(r) += sigma * gauss(noise_rng);
            t.received.push_back(y);
        }
        return t;
    }

    std::vector<StreamDecode> zf_decode(const BeamformingPlan &plan, const ExtendedChannel &ext, double rho,
                                        const Transmission *received, double noise_var)
    {
        check(plan, ext, rho, noise_var);
        if (!plan.has_zero_forcing())
            throw StateError("zf_decode needs a plan with zero-forcing vectors");
        const double E = stream_energy(plan, rho);

        std::vector<StreamDecode> out;
        for (int k = 1; k <= plan.N; ++k)
        {
            // Every stream's effective direction at receiver k.
            std::vector<Eigen::VectorXd> arrivals;
            std::vector<std::tuple<int, int, int>> ids;
            for (int j = 1; j <= plan.N; ++j)
                for (int m = 1; m <= plan.M; ++m)
                {
                    const Eigen::MatrixXd &V = plan.beams(j, m);
                    for (Eigen::Index b = 0; b < V.cols(); ++b)
                    {
                        arrivals.push_back(ext.gain(k, m).cwiseProduct(unit(V.col(b))));
                        ids.emplace_back(j, m, static_cast<int>(b));
                    }
                }

            for (int i = 1; i <= plan.M; ++i)
            {
                const Eigen::MatrixXd &U = plan.zero_forcers(k, i);
                for (Eigen::Index a = 0; a < U.cols(); ++a)
                {
                    const Eigen::VectorXd u = U.col(a);
                    StreamDecode d;
                    d.rx = k;
                    d.tx = i;
                    d.stream = static_cast<int>(a);
                    double signal_proj = 0.0;
                    for (std::size_t s = 0; s < arrivals.size(); ++s)
                    {
                        const double p = u.dot(arrivals[s]);
                        if (ids[s] == std::make_tuple(k, i, static_cast<int>(a)))
                        {
                            d.gain = p * p;
                            signal_proj = p;
                        }
                        else
                            d.interference += E * p * p;
                    }
                    d.noise = noise_var * u.squaredNorm();
                    const double denom = d.noise + d.interference;
                    d.sinr = denom > 0.0 ? E * d.gain / denom : (E * d.gain > 0.0 ? INFINITY : 0.0);
                    if (received && E > 0.0 && signal_proj != 0.0)
                        d.estimate = u.dot(received->received.at(k - 1)) / (std::sqrt(E) * signal_proj);
                    out.push_back(d);
                }
            }
        }
        return out;
    }

    double sum_rate(const BeamformingPlan &plan, const ExtendedChannel &ext, double rho, double noise_var)
    {
        if (plan.total_streams() == 0)
            return 0.0;
        double bits = 0.0;
        for (const auto &d : zf_decode(plan, ext, rho, nullptr, noise_var))
            bits += std::log2(1.0 + d.sinr);
        return bits / plan.mu;
    }

    std::vector<RatePoint> sweep(const SlopeSetup &setup, std::span<const double> rho_db)
    {
        if (setup.trials < 1)
            throw ParameterError("trials must be >= 1");
        if (!(setup.scale > 0.0) || !std::isfinite(setup.scale))
            throw ParameterError("channel scale must be positive");
        setup.bounds.validate();
        const SchemeSpec &spec = setup.scheme;
        const int mu = scheme_length(spec);
        const ChannelProcess proc =
            sample_channel(spec.M, spec.N, setup.trials * mu, derive_seed(setup.seed, "link.channel"), setup.bounds);

        std::vector<std::vector<double>> rates(rho_db.size());
        for (int kappa = 0; kappa < setup.trials; ++kappa)
        {
            ExtendedChannel ext = extend(proc, kappa, mu);
            if (setup.scale != 1.0)
                ext = ext.scaled(setup.scale);
            const BeamformingPlan plan = build_plan(spec, ext, derive_seed(setup.seed, "link.plan", kappa), setup.rank_tol);
            for (std::size_t p = 0; p < rho_db.size(); ++p)
                rates[p].push_back(sum_rate(plan, ext, db_to_linear(rho_db[p])));
        }

        std::vector<RatePoint> out;
        for (std::size_t p = 0; p < rho_db.size(); ++p)
        {
            const auto &r = rates[p];
            double mean = 0.0;
            for (double x : r)
                mean += x;
            mean /= r.size();
            double var = 0.0;
            for (double x : r)
                var += (x - mean) * (x - mean);
            const double se = r.size() > 1 ? std::sqrt(var / (r.size() - 1) / r.size()) : 0.0;
            out.push_back({rho_db[p], mean, se});
        }
        return out;
    }

    double slope_between(const RatePoint &lo, const RatePoint &hi)
    {
        const double dlog = (hi.rho_db - lo.rho_db) / (10.0 * std::log10(2.0));
        if (dlog == 0.0)
            throw ParameterError("slope needs two distinct SNR points");
        return (hi.mean - lo.mean) / dlog;
    }

    double dof_slope(const SlopeSetup &setup, double lo_db, double hi_db)
    {
        if (lo_db < 30.0)
            throw ParameterError("slope needs rho_lo >= 30 dB");
        if (hi_db < lo_db + 20.0)
            throw ParameterError("slope needs rho_hi >= 100 rho_lo");
        const double pts[] = {lo_db, hi_db};
        const auto r = sweep(setup, pts);
        return slope_between(r[0], r[1]);
    }

    double gap_variation(std::span<const RatePoint> points, double dof)
    {
        if (points.empty())
            return 0.0;
        double lo = INFINITY, hi = -INFINITY;
        for (const auto &p : points)
        {
            const double g = p.mean - dof * p.rho_db / (10.0 * std::log10(2.0));
            lo = std::min(lo, g);
            hi = std::max(hi, g);
        }
        return hi - lo;
    }
}
