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

#include "cli.hpp"

#include "criteria.hpp"
#include "xnet/delay_tdma.hpp"
#include "xnet/dof_region.hpp"
#include "xnet/link_sim.hpp"
#include "xnet/plan_io.hpp"
#include "xnet/record.hpp"
#include "xnet/relay_chain.hpp"
#include "xnet/schemes.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace xnet::cli
{
    namespace
    {
        const std::vector<std::string> commands = {"outerbound", "build", "verify", "slope", "delay", "relay", "suite"};

        template <class T>
        std::string join(const std::vector<T> &v, const char *sep = ",")
        {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i)
            {
                if (i)
                    s += sep;
                if constexpr (std::is_same_v<T, std::string>)
                    s += v[i];
                else if constexpr (std::is_floating_point_v<T>)
                    s += format_double(v[i]);
                else
                    s += std::to_string(v[i]);
            }
            return s;
        }

        /// A table plus a summary record, written as CSV (summary lines prefixed "# ") or as
        /// one flat record (table rows under row.<i>).
        class Emitter
        {
        public:
            Emitter(const ExperimentConfig &cfg, std::vector<std::string> columns) : columns_(std::move(columns))
            {
                summary.set("command", cfg.command);
                summary.set("config_hash", hex64(config_hash(cfg)));
                summary.set("seed", std::to_string(cfg.seed));
            }

            void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

            void write(std::ostream &out, const std::string &format) const
            {
                if (format == "record")
                {
                    Record r = summary;
                    if (!columns_.empty())
                        r.set("columns", join(columns_));
                    for (std::size_t i = 0; i < rows_.size(); ++i)
                        r.set("row." + std::to_string(i), join(rows_[i]));
                    out << r.str();
                    return;
                }
                if (!columns_.empty())
                {
                    out << join(columns_) << "\n";
                    for (const auto &r : rows_)
                        out << join(r) << "\n";
                }
                for (const auto &[k, v] : summary.entries())
                    out << "# " << k << "=" << v << "\n";
            }

            Record summary;

        private:
            std::vector<std::string> columns_;
            std::vector<std::vector<std::string>> rows_;
        };

        std::string csv_quote(const std::string &s)
        {
            if (s.find_first_of(",\"\n") == std::string::npos)
                return s;
            std::string q = "\"";
            for (char c : s)
                q += c == '"' ? std::string("\"\"") : std::string(1, c);
            return q + "\"";
        }

        std::pair<int, int> parse_pair(const std::string &text, const std::string &field)
        {
            const auto colon = text.find(':');
            try
            {
                if (colon == std::string::npos)
                    throw std::invalid_argument("no colon");
                std::size_t a = 0, b = 0;
                const int rx = std::stoi(text.substr(0, colon), &a);
                const int tx = std::stoi(text.substr(colon + 1), &b);
                if (a != colon || b != text.size() - colon - 1)
                    throw std::invalid_argument("trailing text");
                return {rx, tx};
            }
            catch (const std::exception &)
            {
                throw ConfigError(field, "expected rx:tx pairs, got '" + text + "'");
            }
        }

        ChannelBounds bounds_of(const ExperimentConfig &cfg) { return {cfg.h_min, cfg.h_max}; }

        SchemeSpec scheme_of(const ExperimentConfig &cfg)
        {
            SchemeSpec s;
            s.scheme = cfg.kind == "general" ? SchemeChoice::general : SchemeChoice::perfect;
            s.M = cfg.M;
            s.N = cfg.N;
            s.order = cfg.order;
            s.general.basis = cfg.basis == "monomial" ? StreamBasis::monomial : StreamBasis::orthonormal;
            s.general.bounds = bounds_of(cfg);
            return s;
        }

        DofRegionSpec region_of(const ExperimentConfig &cfg)
        {
            DofRegionSpec spec = DofRegionSpec::single_antenna(cfg.M, cfg.N);
            if (!cfg.tx_antennas.empty())
                spec.tx_antennas = cfg.tx_antennas;
            if (!cfg.rx_antennas.empty())
                spec.rx_antennas = cfg.rx_antennas;
            for (const auto &p : cfg.null_mask)
                spec.null_mask.insert(parse_pair(p, "null"));
            return spec;
        }

        /// Channel block the build/verify commands operate on.
        ExtendedChannel cli_channel(const ExperimentConfig &cfg, int mu)
        {
            const ChannelProcess proc = sample_channel(cfg.M, cfg.N, mu, derive_seed(cfg.seed, "cli.channel"), bounds_of(cfg));
            ExtendedChannel ext = extend(proc, 0, mu);
            return cfg.scale == 1.0 ? ext : ext.scaled(cfg.scale);
        }

        int cmd_outerbound(const ExperimentConfig &cfg, std::ostream &out)
        {
            const DofRegionSpec spec = region_of(cfg);
            std::vector<Rational> w;
            for (const auto &s : cfg.weights)
                w.push_back(parse_rational(s));
            const LinearProgram lp = region_constraints(spec, w);
            const auto sol = solve_lp(lp);

            Emitter e(cfg, {"rx", "tx", "dof"});
            for (int j = 1; j <= cfg.N; ++j)
                for (int i = 1; i <= cfg.M; ++i)
                    e.row({std::to_string(j), std::to_string(i), to_string(sol.optimizer[dof_index(cfg.M, j, i)])});
            e.summary.set("M", cfg.M);
            e.summary.set("N", cfg.N);
            e.summary.set("status", std::string(sol.status == LpStatus::optimal ? "optimal" : "unbounded"));
            e.summary.set("value", to_string(sol.value));
            e.summary.set("value_decimal", to_double(sol.value));
            e.summary.set("binding", join(sol.binding, " "));
            e.summary.set("constraints", static_cast<int>(lp.constraints.size()));
            e.summary.set("total_dof_bound", to_string(total_dof_bound(cfg.M, cfg.N)));
            e.write(out, cfg.format);
            return exit_pass;
        }

        void report_rows(Emitter &e, const AlignmentReport &rep)
        {
            for (std::size_t k = 0; k < rep.interference_dim.size(); ++k)
                e.row({std::to_string(k + 1), std::to_string(rep.interference_dim[k]),
                       std::to_string(rep.expected_interference_dim[k]), format_double(rep.lambda_ratio[k]),
                       rep.lambda_full_rank[k] ? "1" : "0"});
            e.summary.set("pass", rep.pass ? 1 : 0);
            e.summary.set("max_alignment_residual", rep.max_alignment_residual);
            e.summary.set("max_cross_gain", rep.max_cross_gain);
            e.summary.set("achieved_dof", to_string(rep.achieved_dof));
        }

        int cmd_build(const ExperimentConfig &cfg, std::ostream &out)
        {
            const SchemeSpec spec = scheme_of(cfg);
            const int mu = scheme_length(spec);
            const ExtendedChannel ext = cli_channel(cfg, mu);
            const BeamformingPlan plan = build_plan(spec, ext, derive_seed(cfg.seed, "cli.plan"), cfg.rank_tol);

            if (!cfg.plan_path.empty())
            {
                std::ofstream f(cfg.plan_path);
                if (!f)
                    throw ConfigError("plan", "cannot write '" + cfg.plan_path + "'");
                write_plan(f, plan);
            }
            if (cfg.format == "record" && cfg.plan_path.empty())
            {
                std::ostringstream body;
                write_plan(body, plan);
                out << "command=build\nconfig_hash=" << hex64(config_hash(cfg)) << "\nseed=" << cfg.seed << "\n"
                    << body.str();
                return exit_pass;
            }
            Emitter e(cfg, {"rx", "tx", "streams"});
            for (int j = 1; j <= plan.N; ++j)
                for (int i = 1; i <= plan.M; ++i)
                    e.row({std::to_string(j), std::to_string(i), std::to_string(plan.streams(j, i))});
            e.summary.set("plan", plan.name());
            e.summary.set("mu", plan.mu);
            e.summary.set("total_streams", plan.total_streams());
            e.summary.set("achieved_dof", to_string(achieved_dof(plan)));
            if (!cfg.plan_path.empty())
                e.summary.set("plan_file", cfg.plan_path);
            e.write(out, cfg.format);
            return exit_pass;
        }

        int cmd_verify(const ExperimentConfig &cfg, std::ostream &out, std::ostream &err)
        {
            BeamformingPlan plan;
            if (!cfg.plan_path.empty())
            {
                std::ifstream f(cfg.plan_path);
                if (!f)
                    throw ConfigError("plan", "cannot read '" + cfg.plan_path + "'");
                plan = read_plan(f);
                if (plan.M != cfg.M || plan.N != cfg.N)
                    throw ConfigError("plan", "plan is " + std::to_string(plan.M) + "x" + std::to_string(plan.N) +
                                                  ", config is " + std::to_string(cfg.M) + "x" + std::to_string(cfg.N));
            }
            const SchemeSpec spec = scheme_of(cfg);
            const int mu = cfg.plan_path.empty() ? scheme_length(spec) : plan.mu;
            const ExtendedChannel ext = cli_channel(cfg, mu);

            Emitter e(cfg, {"rx", "interference_dim", "expected_dim", "lambda_ratio", "lambda_full_rank"});
            try
            {
                if (cfg.plan_path.empty())
                    plan = build_plan(spec, ext, derive_seed(cfg.seed, "cli.plan"), cfg.rank_tol);
            }
            catch (const RankFailure &f)
            {
                e.summary.set("pass", 0);
                e.summary.set("failure", std::string("rank"));
                e.summary.set("receiver", f.receiver());
                e.summary.set("singular_value_ratio", f.singular_value_ratio());
                e.write(out, cfg.format);
                err << "verification failed: " << f.what() << "\n";
                return exit_verification_failure;
            }
            const AlignmentReport rep = verify_plan(plan, ext, {cfg.tol, cfg.rank_tol});
            e.summary.set("plan", plan.name());
            report_rows(e, rep);
            if (plan.kind == SchemeKind::perfect_mx2 && !plan.dual)
                e.summary.set("perfect_alignment_residual", perfect_alignment_residual(plan, ext));
            e.write(out, cfg.format);
            if (!rep.pass)
            {
                err << "verification failed: residual " << rep.max_alignment_residual << ", cross gain "
                    << rep.max_cross_gain << "\n";
                return exit_verification_failure;
            }
            return exit_pass;
        }

        int cmd_slope(const ExperimentConfig &cfg, std::ostream &out)
        {
            SlopeSetup setup;
            setup.scheme = scheme_of(cfg);
            setup.seed = cfg.seed;
            setup.trials = cfg.trials;
            setup.scale = cfg.scale;
            setup.bounds = bounds_of(cfg);
            setup.rank_tol = cfg.rank_tol;
            const auto pts = sweep(setup, cfg.rho_db);

            const int mu = scheme_length(setup.scheme);
            const Rational dof = achieved_dof(build_plan(setup.scheme, cli_channel(cfg, mu), derive_seed(cfg.seed, "cli.plan"),
                                                         cfg.rank_tol));
            Emitter e(cfg, {"rho_db", "sum_rate_bits", "stderr"});
            for (const auto &p : pts)
                e.row({format_double(p.rho_db), format_double(p.mean), format_double(p.std_error)});
            const double slope = slope_between(pts.front(), pts.back());
            e.summary.set("scheme", std::string(cfg.kind));
            e.summary.set("mu", mu);
            e.summary.set("trials", cfg.trials);
            e.summary.set("slope", slope);
            e.summary.set("achieved_dof", to_string(dof));
            e.summary.set("achieved_dof_decimal", to_double(dof));
            e.summary.set("relative_error", std::abs(slope - to_double(dof)) / to_double(dof));
            e.summary.set("gap_variation", gap_variation(pts, to_double(dof)));
            e.write(out, cfg.format);
            return exit_pass;
        }

        int cmd_delay(const ExperimentConfig &cfg, std::ostream &out)
        {
            const PropagationDelays T{cfg.delays[0], cfg.delays[1], cfg.delays[2], cfg.delays[3]};
            const DelaySimulation sim = simulate({T, cfg.horizon});
            const ThroughputReport rep = throughput(sim);

            Emitter e(cfg, {"slot", "receiver", "arrivals", "role"});
            std::map<long, std::array<const std::vector<Arrival> *, 2>> by_slot;
            for (int r = 0; r < 2; ++r)
                for (const auto &[slot, arrivals] : sim.slots[r])
                    by_slot[slot][r] = &arrivals;
            for (const auto &[slot, pair] : by_slot)
                for (int r = 0; r < 2; ++r)
                {
                    if (!pair[r])
                        continue;
                    std::string names;
                    bool des = false, intf = false;
                    for (const auto &a : *pair[r])
                    {
                        names += (names.empty() ? "W" : " W") + std::to_string(a.msg_rx) + std::to_string(a.msg_tx);
                        (a.role == ArrivalRole::desired ? des : intf) = true;
                    }
                    const char *role = des && intf ? "collision" : des ? (pair[r]->size() > 1 ? "collision" : "desired")
                                                                       : "interference";
                    e.row({std::to_string(slot), std::to_string(r + 1), names, role});
                }
            e.summary.set("delays", join(cfg.delays));
            e.summary.set("horizon", cfg.horizon);
            e.summary.set("throughput", to_string(rep.total));
            for (int j = 1; j <= 2; ++j)
                for (int i = 1; i <= 2; ++i)
                    e.summary.set("throughput_W" + std::to_string(j) + std::to_string(i),
                                  to_string(rep.per_message[(j - 1) * 2 + (i - 1)]));
            e.summary.set("delivered", rep.delivered);
            e.summary.set("collisions", rep.collisions);
            e.write(out, cfg.format);
            return rep.collisions == 0 ? exit_pass : exit_verification_failure;
        }

        int cmd_relay(const ExperimentConfig &cfg, std::ostream &out)
        {
            RelayOptions opt;
            opt.scheme = cfg.kind == "general" ? SchemeChoice::general : SchemeChoice::perfect;
            opt.order = cfg.order;
            opt.phase2 = cfg.phase2 == "direct" ? Phase2Mode::direct : Phase2Mode::reciprocal;
            opt.seed = cfg.seed;
            opt.verify = {cfg.tol, cfg.rank_tol};
            opt.general = scheme_of(cfg).general;
            const auto c = compose_two_hop(make_relay_topology(cfg.M, cfg.K, opt), opt);

            Emitter e(cfg, {"source", "relay", "hop1_streams", "hop2_streams", "paired"});
            for (const auto &l : c.links)
                e.row({std::to_string(l.source), std::to_string(l.relay), std::to_string(l.hop1_streams),
                       std::to_string(l.hop2_streams), std::to_string(l.paired)});
            e.summary.set("M", cfg.M);
            e.summary.set("K", cfg.K);
            e.summary.set("n", cfg.kind == "general" ? cfg.order : 0);
            e.summary.set("scheme", cfg.kind);
            e.summary.set("phase2", cfg.phase2);
            e.summary.set("hop1_plan", c.hop1.name());
            e.summary.set("hop2_plan", c.hop2.name());
            e.summary.set("hop1_dof", to_string(achieved_dof(c.hop1)));
            e.summary.set("hop2_dof", to_string(achieved_dof(c.hop2)));
            e.summary.set("mu1", c.mu1);
            e.summary.set("mu2", c.mu2);
            e.summary.set("paired", c.paired);
            e.summary.set("lost", c.lost);
            e.summary.set("end_to_end_dof", to_string(c.end_to_end));
            e.summary.set("bound", to_string(relay_dof(cfg.M, cfg.K)));
            e.summary.set("pass", c.pass ? 1 : 0);
            e.write(out, cfg.format);
            return c.pass ? exit_pass : exit_verification_failure;
        }

        int cmd_suite(const ExperimentConfig &cfg, std::ostream &out)
        {
            std::ostringstream progress;
            const auto results = acceptance::run_suite(progress, cfg.criteria);
            Emitter e(cfg, {"criterion", "title", "result", "seconds", "detail"});
            int failed = 0;
            for (const auto &r : results)
            {
                failed += !r.pass;
                char secs[32];
                std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
                e.row({std::to_string(r.id), r.title, r.pass ? "PASS" : "FAIL", secs, csv_quote(r.detail)});
            }
            e.summary.set("passed", static_cast<int>(results.size()) - failed);
            e.summary.set("failed", failed);
            e.write(out, cfg.format);
            return failed == 0 ? exit_pass : exit_verification_failure;
        }
    }

    std::string canonical_config(const ExperimentConfig &c)
    {
        Record r;
        r.set("command", c.command);
        r.set("M", c.M);
        r.set("N", c.N);
        r.set("order", c.order);
        r.set("seed", std::to_string(c.seed));
        r.set("trials", c.trials);
        r.set("rho_db", join(c.rho_db));
        r.set("tol", c.tol);
        r.set("rank_tol", c.rank_tol);
        r.set("kind", c.kind);
        r.set("basis", c.basis);
        r.set("h_min", c.h_min);
        r.set("h_max", c.h_max);
        r.set("scale", c.scale);
        r.set("at", join(c.tx_antennas));
        r.set("ar", join(c.rx_antennas));
        r.set("null", join(c.null_mask));
        r.set("weights", join(c.weights));
        r.set("delays", join(c.delays));
        r.set("horizon", c.horizon);
        r.set("k", c.K);
        r.set("phase2", c.phase2);
        r.set("plan", c.plan_path);
        r.set("criteria", join(c.criteria));
        return r.str();
    }

    std::uint64_t config_hash(const ExperimentConfig &cfg) { return fnv1a64(canonical_config(cfg)); }

    void validate(const ExperimentConfig &c)
    {
        if (std::find(commands.begin(), commands.end(), c.command) == commands.end())
            throw ConfigError("command", "unknown command '" + c.command + "'");
        if (c.format != "csv" && c.format != "record")
            throw ConfigError("format", "must be csv or record");
        if (c.command == "suite")
        {
            for (int id : c.criteria)
                if (id < 1 || id > acceptance::criterion_count)
                    throw ConfigError("criterion", "ids must lie in 1.." + std::to_string(acceptance::criterion_count));
            return;
        }
        if (c.command == "delay")
        {
            if (c.delays.size() != 4)
                throw ConfigError("delays", "expected four values T11,T12,T21,T22");
            for (long d : c.delays)
                if (d < 0)
                    throw ConfigError("delays", "delays must be non-negative");
            if (!validate_delays({c.delays[0], c.delays[1], c.delays[2], c.delays[3]}))
                throw ConfigError("delays", "need T11=0, T12=1, T21=0, T22=2 (mod 3)");
            if (c.horizon < 3 || c.horizon % 3 != 0)
                throw ConfigError("horizon", "must be a positive multiple of 3");
            return;
        }

        if (c.M < 1)
            throw ConfigError("m", "must be >= 1");
        if (c.N < 1 && c.command != "relay")
            throw ConfigError("n", "must be >= 1");

        if (c.command == "outerbound")
        {
            if (!c.tx_antennas.empty() && static_cast<int>(c.tx_antennas.size()) != c.M)
                throw ConfigError("at", "needs one antenna count per transmitter");
            if (!c.rx_antennas.empty() && static_cast<int>(c.rx_antennas.size()) != c.N)
                throw ConfigError("ar", "needs one antenna count per receiver");
            for (int a : c.tx_antennas)
                if (a < 1)
                    throw ConfigError("at", "antenna counts must be >= 1");
            for (int a : c.rx_antennas)
                if (a < 1)
                    throw ConfigError("ar", "antenna counts must be >= 1");
            for (const auto &p : c.null_mask)
            {
                const auto [rx, tx] = parse_pair(p, "null");
                if (rx < 1 || rx > c.N || tx < 1 || tx > c.M)
                    throw ConfigError("null", "message " + p + " outside the network");
            }
            if (!c.weights.empty())
            {
                if (static_cast<int>(c.weights.size()) != c.M * c.N)
                    throw ConfigError("weights", "needs one weight per message (M*N)");
                for (const auto &w : c.weights)
                    try
                    {
                        parse_rational(w);
                    }
                    catch (const InputError &)
                    {
                        throw ConfigError("weights", "not a rational: '" + w + "'");
                    }
            }
            return;
        }

        if (c.kind != "perfect" && c.kind != "general")
            throw ConfigError("kind", "must be perfect or general");
        if (c.basis != "orthonormal" && c.basis != "monomial")
            throw ConfigError("basis", "must be orthonormal or monomial");
        if (c.order < 1 || c.order > 6)
            throw ConfigError("order", "must lie in 1..6");
        if (!(c.h_min > 0.0) || !(c.h_max > c.h_min) || !std::isfinite(c.h_max))
            throw ConfigError("h-min", "need 0 < h_min < h_max < inf");
        if (!(c.scale > 0.0) || !std::isfinite(c.scale))
            throw ConfigError("scale", "must be positive");
        if (!(c.tol > 0.0 && c.tol < 1.0))
            throw ConfigError("tol", "must lie in (0, 1)");
        if (!(c.rank_tol > 0.0 && c.rank_tol < 1.0))
            throw ConfigError("rank-tol", "must lie in (0, 1)");

        if (c.command == "relay")
        {
            if (c.K < 1)
                throw ConfigError("k", "must be >= 1");
            if (c.phase2 != "reciprocal" && c.phase2 != "direct")
                throw ConfigError("phase2", "must be reciprocal or direct");
            if (c.kind == "perfect" && c.M != 2 && c.K != 2)
                throw ConfigError("kind", "perfect relay composition needs M = 2 or K = 2");
            if (c.kind == "general")
                general_extension_length(c.M, c.K, c.order);
            return;
        }

        if (c.kind == "perfect" && c.M != 2 && c.N != 2 && c.plan_path.empty())
            throw ConfigError("kind", "perfect alignment needs M = 2 or N = 2");
        if (c.kind == "general")
        {
            const long G = static_cast<long>(c.M - 1) * (c.N - 1);
            if (G > 6)
                throw ConfigError("m", "general plans support (M-1)(N-1) <= 6");
            if (general_extension_length(c.M, c.N, c.order) > 4096)
                throw ConfigError("order", "extension length beyond 4096");
        }
        if (c.command == "slope")
        {
            if (c.trials < 1)
                throw ConfigError("trials", "must be >= 1");
            if (c.rho_db.size() < 2)
                throw ConfigError("rho-db", "needs at least two SNR points");
            for (std::size_t i = 1; i < c.rho_db.size(); ++i)
                if (!(c.rho_db[i] > c.rho_db[i - 1]))
                    throw ConfigError("rho-db", "points must be strictly increasing");
            for (double d : c.rho_db)
                if (!std::isfinite(d))
                    throw ConfigError("rho-db", "points must be finite");
        }
    }

    int run(const ExperimentConfig &cfg, std::ostream &out, std::ostream &err)
    {
        try
        {
            validate(cfg);
            if (cfg.command == "outerbound")
                return cmd_outerbound(cfg, out);
            if (cfg.command == "build")
                return cmd_build(cfg, out);
            if (cfg.command == "verify")
                return cmd_verify(cfg, out, err);
            if (cfg.command == "slope")
                return cmd_slope(cfg, out);
            if (cfg.command == "delay")
                return cmd_delay(cfg, out);
            if (cfg.command == "relay")
                return cmd_relay(cfg, out);
            return cmd_suite(cfg, out);
        }
        catch (const ConfigError &e)
        {
            err << "configuration error: " << e.what() << "\n";
            return exit_config_error;
        }
        catch (const ParameterError &e)
        {
            err << "configuration error: " << e.what() << "\n";
            return exit_config_error;
        }
        catch (const InputError &e)
        {
            err << "input error: " << e.what() << "\n";
            return exit_config_error;
        }
        catch (const RankFailure &e)
        {
            err << "verification failed at receiver " << e.receiver() << " (ratio " << e.singular_value_ratio()
                << "): " << e.what() << "\n";
            return exit_verification_failure;
        }
        catch (const Error &e)
        {
            err << "verification failed: " << e.what() << "\n";
            return exit_verification_failure;
        }
    }

    int main_entry(int argc, char **argv)
    {
        CLI::App app{"Interference alignment toolkit for M x N X networks"};
        app.require_subcommand(1);
        app.set_config("--config", "", "key = value config file; flags override it");
        ExperimentConfig cfg;
        std::string seed_text = "1";

        auto common = [&](CLI::App *s) {
            s->add_option("--m", cfg.M, "transmitters");
            s->add_option("--n", cfg.N, "receivers");
            s->add_option("--seed", seed_text, "top-level seed");
            s->add_option("-o,--output", cfg.output_path, "output file (default: stdout)");
            s->add_option("--format", cfg.format, "csv or record");
        };
        auto scheme = [&](CLI::App *s) {
            s->add_option("--kind", cfg.kind, "perfect or general");
            s->add_option("--order", cfg.order, "alignment order n of general plans");
            s->add_option("--basis", cfg.basis, "orthonormal or monomial stream basis");
            s->add_option("--tol", cfg.tol, "alignment / cross-gain tolerance");
            s->add_option("--rank-tol", cfg.rank_tol, "relative rank tolerance");
            s->add_option("--h-min", cfg.h_min, "smallest channel magnitude");
            s->add_option("--h-max", cfg.h_max, "largest channel magnitude");
            s->add_option("--scale", cfg.scale, "common channel scale factor");
        };

        auto *ob = app.add_subcommand("outerbound", "maximize over the DoF region outerbound");
        common(ob);
        ob->add_option("--at", cfg.tx_antennas, "transmit antennas per transmitter")->delimiter(',');
        ob->add_option("--ar", cfg.rx_antennas, "receive antennas per receiver")->delimiter(',');
        ob->add_option("--null", cfg.null_mask, "absent messages rx:tx")->delimiter(',');
        ob->add_option("--weights", cfg.weights, "objective weight per message, receiver-major")->delimiter(',');

        auto *bu = app.add_subcommand("build", "build a beamforming plan");
        common(bu);
        scheme(bu);
        bu->add_option("--plan", cfg.plan_path, "write the plan record to this file");

        auto *ve = app.add_subcommand("verify", "verify a plan");
        common(ve);
        scheme(ve);
        ve->add_option("--plan", cfg.plan_path, "plan record to verify (default: build one)");

        auto *sl = app.add_subcommand("slope", "sum rate versus SNR and the DoF slope");
        common(sl);
        scheme(sl);
        sl->add_option("--trials", cfg.trials, "channel blocks per SNR point");
        sl->add_option("--rho-db", cfg.rho_db, "SNR points in dB")->delimiter(',');

        auto *de = app.add_subcommand("delay", "propagation-delay alignment on the 2x2 network");
        de->add_option("--delays", cfg.delays, "T11,T12,T21,T22")->delimiter(',');
        de->add_option("--horizon", cfg.horizon, "transmit slots");
        de->add_option("-o,--output", cfg.output_path, "output file (default: stdout)");
        de->add_option("--format", cfg.format, "csv or record");

        auto *re = app.add_subcommand("relay", "two-hop parallel relay composition");
        common(re);
        scheme(re);
        re->add_option("--k", cfg.K, "relays");
        re->add_option("--phase2", cfg.phase2, "reciprocal or direct");

        auto *su = app.add_subcommand("suite", "run the acceptance battery");
        su->add_option("--criterion", cfg.criteria, "criterion ids (default: all)")->delimiter(',');
        su->add_option("-o,--output", cfg.output_path, "output file (default: stdout)");
        su->add_option("--format", cfg.format, "csv or record");

        try
        {
            app.parse(argc, argv);
        }
        catch (const CLI::CallForHelp &e)
        {
            return app.exit(e);
        }
        catch (const CLI::ParseError &e)
        {
            app.exit(e);
            return exit_config_error;
        }
        cfg.command = app.get_subcommands().front()->get_name();
        try
        {
            std::size_t used = 0;
            cfg.seed = std::stoull(seed_text, &used);
            if (used != seed_text.size())
                throw std::invalid_argument("trailing text");
        }
        catch (const std::exception &)
        {
            std::cerr << "configuration error: --seed: not an unsigned integer\n";
            return exit_config_error;
        }

        if (cfg.output_path.empty())
            return run(cfg, std::cout, std::cerr);
        std::ofstream f(cfg.output_path);
        if (!f)
        {
            std::cerr << "configuration error: --output: cannot open '" << cfg.output_path << "'\n";
            return exit_config_error;
        }
        return run(cfg, f, std::cerr);
    }
}
