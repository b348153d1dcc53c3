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

#include <gtest/gtest.h>

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace xnet::cli;

namespace
{
    struct Outcome
    {
        int code;
        std::string out;
        std::string err;
    };

    Outcome run_cfg(const ExperimentConfig &cfg)
    {
        std::ostringstream out, err;
        const int code = run(cfg, out, err);
        return {code, out.str(), err.str()};
    }

    ExperimentConfig make(const std::string &command)
    {
        ExperimentConfig c;
        c.command = command;
        return c;
    }

    std::filesystem::path scratch(const std::string &name)
    {
        return std::filesystem::temp_directory_path() / ("xnet_cli_test_" + name);
    }

    std::string slurp(const std::filesystem::path &p)
    {
        std::ifstream f(p);
        std::stringstream s;
        s << f.rdbuf();
        return s.str();
    }

    int invoke(std::vector<std::string> args)
    {
        args.insert(args.begin(), "xnet");
        std::vector<char *> argv;
        for (auto &a : args)
            argv.push_back(a.data());
        return main_entry(static_cast<int>(argv.size()), argv.data());
    }
}

TEST(Cli, OuterboundTable)
{
    const Outcome o = run_cfg(make("outerbound"));
    EXPECT_EQ(o.code, exit_pass);
    EXPECT_EQ(o.out.rfind("rx,tx,dof\n", 0), 0U);
    EXPECT_NE(o.out.find("# value=4/3"), std::string::npos);
}

TEST(Cli, NullDiagonal)
{
    ExperimentConfig c = make("outerbound");
    c.M = c.N = 3;
    c.null_mask = {"1:1", "2:2", "3:3"};
    EXPECT_NE(run_cfg(c).out.find("# value=3/2"), std::string::npos);
}

TEST(Cli, ByteIdenticalReruns)
{
    for (const std::string cmd : {"outerbound", "build", "verify", "delay", "relay"})
    {
        ExperimentConfig c = make(cmd);
        c.kind = "general";
        const Outcome a = run_cfg(c);
        const Outcome b = run_cfg(c);
        EXPECT_EQ(a.out, b.out) << cmd;
        EXPECT_FALSE(a.out.empty()) << cmd;
    }
    ExperimentConfig s = make("slope");
    s.trials = 5;
    EXPECT_EQ(run_cfg(s).out, run_cfg(s).out);
}

TEST(Cli, SummaryCarriesHashAndSeed)
{
    ExperimentConfig c = make("build");
    c.seed = 42;
    const Outcome o = run_cfg(c);
    std::ostringstream hash;
    hash << "# config_hash=" << std::hex;
    hash.width(16);
    hash.fill('0');
    hash << config_hash(c);
    EXPECT_NE(o.out.find(hash.str()), std::string::npos);
    EXPECT_NE(o.out.find("# seed=42"), std::string::npos);
    EXPECT_NE(o.out.find("# command=build"), std::string::npos);
}

TEST(Cli, HashTracksResultFields)
{
    ExperimentConfig a = make("slope");
    ExperimentConfig b = a;
    EXPECT_EQ(config_hash(a), config_hash(b));
    b.seed = 2;
    EXPECT_NE(config_hash(a), config_hash(b));
    b = a;
    b.output_path = "elsewhere.csv";
    EXPECT_EQ(config_hash(a), config_hash(b));
    EXPECT_NE(canonical_config(a).find("seed=1"), std::string::npos);
}

TEST(Cli, ConfigErrorsNameTheField)
{
    ExperimentConfig c = make("build");
    c.M = 0;
    Outcome o = run_cfg(c);
    EXPECT_EQ(o.code, exit_config_error);
    EXPECT_NE(o.err.find("--m"), std::string::npos);

    c = make("verify");
    c.tol = -1.0;
    o = run_cfg(c);
    EXPECT_EQ(o.code, exit_config_error);
    EXPECT_NE(o.err.find("--tol"), std::string::npos);

    c = make("build");
    c.M = c.N = 3;
    try
    {
        validate(c);
        FAIL() << "perfect 3x3 accepted";
    }
    catch (const ConfigError &e)
    {
        EXPECT_FALSE(e.field().empty());
    }

    c = make("delay");
    c.delays = {0, 1, 0};
    EXPECT_EQ(run_cfg(c).code, exit_config_error);
}

TEST(Cli, VerificationFailureExit)
{
    ExperimentConfig c = make("relay");
    c.kind = "general";
    c.phase2 = "direct";
    const Outcome o = run_cfg(c);
    EXPECT_EQ(o.code, exit_verification_failure);
    EXPECT_NE(o.out.find("# lost="), std::string::npos);

    c.phase2 = "reciprocal";
    const Outcome ok = run_cfg(c);
    EXPECT_EQ(ok.code, exit_pass);
    EXPECT_NE(ok.out.find("3/5"), std::string::npos);
}

TEST(Cli, DelayTable)
{
    const Outcome o = run_cfg(make("delay"));
    EXPECT_EQ(o.code, exit_pass);
    EXPECT_EQ(o.out.rfind("slot,receiver,arrivals,role\n", 0), 0U);
    EXPECT_NE(o.out.find("4/3"), std::string::npos);
    EXPECT_NE(o.out.find("# collisions=0"), std::string::npos);
}

TEST(Cli, PlanRoundTripThroughFile)
{
    const auto path = scratch("plan.rec");
    ExperimentConfig b = make("build");
    b.M = 2;
    b.N = 3;
    b.kind = "general";
    b.plan_path = path.string();
    ASSERT_EQ(run_cfg(b).code, exit_pass);
    ExperimentConfig v = b;
    v.command = "verify";
    const Outcome o = run_cfg(v);
    EXPECT_EQ(o.code, exit_pass) << o.err;

    ExperimentConfig wrong = v;
    wrong.M = 3;
    EXPECT_EQ(run_cfg(wrong).code, exit_config_error);
    std::filesystem::remove(path);
}

TEST(Cli, ConfigFileWithOverride)
{
    const auto conf = scratch("conf.ini");
    const auto out1 = scratch("out1.csv");
    const auto out2 = scratch("out2.csv");
    {
        std::ofstream f(conf);
        f << "[build]\nm=3\nseed=7\n";
    }
    EXPECT_EQ(invoke({"--config", conf.string(), "build", "-o", out1.string()}), exit_pass);
    const std::string a = slurp(out1);
    EXPECT_NE(a.find("# seed=7"), std::string::npos);
    EXPECT_NE(a.find("# total_streams=6"), std::string::npos);

    EXPECT_EQ(invoke({"--config", conf.string(), "build", "--seed", "9", "-o", out2.string()}), exit_pass);
    const std::string b = slurp(out2);
    EXPECT_NE(b.find("# seed=9"), std::string::npos);
    EXPECT_NE(b.find("# total_streams=6"), std::string::npos);

    EXPECT_EQ(invoke({"build", "--seed", "abc"}), exit_config_error);
    EXPECT_EQ(invoke({"build", "--no-such-flag"}), exit_config_error);
    for (const auto &p : {conf, out1, out2})
        std::filesystem::remove(p);
}

TEST(Cli, RecordFormat)
{
    ExperimentConfig c = make("outerbound");
    c.format = "record";
    const Outcome o = run_cfg(c);
    EXPECT_EQ(o.code, exit_pass);
    EXPECT_NE(o.out.find("value=4/3\n"), std::string::npos);
    EXPECT_NE(o.out.find("row.0=1,1,1/3\n"), std::string::npos);
    c.format = "yaml";
    EXPECT_EQ(run_cfg(c).code, exit_config_error);
}
