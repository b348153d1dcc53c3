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

#include "xnet/errors.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace xnet::cli
{
    enum ExitCode
    {
        exit_pass = 0,
        exit_verification_failure = 1,
        exit_config_error = 2,
    };

    /// Invalid configuration value; field() names the offending flag.
    class ConfigError : public Error
    {
    public:
        ConfigError(std::string field, const std::string &what) : Error("--" + field + ": " + what), field_(std::move(field)) {}
        const std::string &field() const noexcept { return field_; }

    private:
        std::string field_;
    };

    struct ExperimentConfig
    {
        std::string command;
        int M = 2;
        int N = 2;
        int order = 1;
        std::uint64_t seed = 1;
        int trials = 200;
        std::vector<double> rho_db{40.0, 60.0};
        double tol = 1e-9;
        double rank_tol = 1e-9;
        std::string kind = "perfect"; ///< perfect | general
        std::string basis = "orthonormal";
        double h_min = 0.5;
        double h_max = 2.0;
        double scale = 1.0;
        std::vector<int> tx_antennas;
        std::vector<int> rx_antennas;
        std::vector<std::string> null_mask; ///< "rx:tx"
        std::vector<std::string> weights;   ///< one rational per message, receiver-major
        std::vector<long> delays{0, 1, 0, 2};
        long horizon = 300;
        int K = 2;
        std::string phase2 = "reciprocal";
        std::string plan_path;
        std::string output_path;
        std::string format = "csv"; ///< csv | record
        std::vector<int> criteria;
    };

    /// Fixed-order key=value text of every field that affects results.
    std::string canonical_config(const ExperimentConfig &cfg);
    std::uint64_t config_hash(const ExperimentConfig &cfg);

    /// Throws ConfigError for the first invalid field of the selected command.
    void validate(const ExperimentConfig &cfg);

    /// Runs cfg.command, writing results to out and diagnostics to err. Returns an ExitCode.
    int run(const ExperimentConfig &cfg, std::ostream &out, std::ostream &err);

    /// Command-line entry: parses flags (and an optional --config file, overridden by
    /// flags) and writes to --output or standard output.
    int main_entry(int argc, char **argv);
}
