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

#include "xnet/plan_io.hpp"

#include "xnet/errors.hpp"
#include "xnet/record.hpp"

#include <istream>
#include <ostream>

namespace xnet
{
    namespace
    {
        std::string key(const char *what, int rx, int tx)
        {
            return std::string(what) + "_" + std::to_string(rx) + "_" + std::to_string(tx);
        }
    }

    void write_plan(std::ostream &out, const BeamformingPlan &plan)
    {
        Record r;
        r.set("M", plan.M);
        r.set("N", plan.N);
        r.set("mu", plan.mu);
        r.set("kind", std::string(plan.kind == SchemeKind::perfect_mx2 ? "perfect_mx2" : "general_partial"));
        r.set("dual", plan.dual ? 1 : 0);
        r.set("order", plan.order);
        r.set("name", plan.name());
        r.set("total_streams", plan.total_streams());
        r.set("has_zero_forcing", plan.has_zero_forcing() ? 1 : 0);
        for (int j = 1; j <= plan.N; ++j)
            for (int i = 1; i <= plan.M; ++i)
                r.set(key("streams", j, i), plan.streams(j, i));
        for (int j = 1; j <= plan.N; ++j)
            for (int i = 1; i <= plan.M; ++i)
                r.set(key("V", j, i), format_matrix(plan.beams(j, i)));
        if (plan.has_zero_forcing())
            for (int j = 1; j <= plan.N; ++j)
                for (int i = 1; i <= plan.M; ++i)
                    r.set(key("U", j, i), format_matrix(plan.zero_forcers(j, i)));
        out << r.str();
    }

    BeamformingPlan read_plan(std::istream &in)
    {
        const Record r = Record::parse(in);
        BeamformingPlan plan;
        plan.M = static_cast<int>(r.get_long("M"));
        plan.N = static_cast<int>(r.get_long("N"));
        plan.mu = static_cast<int>(r.get_long("mu"));
        if (plan.M < 1 || plan.N < 1 || plan.mu < 1)
            throw InputError("plan record has non-positive dimensions");
        const std::string &kind = r.get("kind");
        if (kind == "perfect_mx2")
            plan.kind = SchemeKind::perfect_mx2;
        else if (kind == "general_partial")
            plan.kind = SchemeKind::general_partial;
        else
            throw InputError("unknown plan kind '" + kind + "'");
        plan.dual = r.get_long("dual") != 0;
        plan.order = static_cast<int>(r.get_long("order"));

        const bool zf = r.get_long("has_zero_forcing") != 0;
        plan.V.resize(static_cast<std::size_t>(plan.M) * plan.N);
        if (zf)
            plan.U.resize(plan.V.size());
        for (int j = 1; j <= plan.N; ++j)
            for (int i = 1; i <= plan.M; ++i)
            {
                const long s = r.get_long(key("streams", j, i));
                Eigen::MatrixXd V = parse_matrix(r.get(key("V", j, i)));
                if (V.rows() != plan.mu || V.cols() != s)
                    throw InputError("shape of " + key("V", j, i) + " disagrees with the stream table");
                plan.V[plan.index(j, i)] = std::move(V);
                if (zf)
                {
                    Eigen::MatrixXd U = parse_matrix(r.get(key("U", j, i)));
                    if (U.rows() != plan.mu || U.cols() != s)
                        throw InputError("shape of " + key("U", j, i) + " disagrees with the stream table");
                    plan.U[plan.index(j, i)] = std::move(U);
                }
            }
        return plan;
    }
}
