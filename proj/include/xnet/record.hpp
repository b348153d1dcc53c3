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

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace xnet
{
    /// Flat key=value text record, one entry per line, insertion-ordered.
    class Record
    {
    public:
        void set(std::string key, std::string value);
        void set(std::string key, long value) { set(std::move(key), std::to_string(value)); }
        void set(std::string key, int value) { set(std::move(key), std::to_string(value)); }
        void set(std::string key, double value);

        bool has(std::string_view key) const;
        /// Throws InputError when the key is missing.
        const std::string &get(std::string_view key) const;
        long get_long(std::string_view key) const;
        double get_double(std::string_view key) const;

        const std::vector<std::pair<std::string, std::string>> &entries() const noexcept { return entries_; }

        std::string str() const;
        /// Skips blank lines and lines starting with '#'. Throws InputError on malformed lines.
        static Record parse(std::istream &in);

    private:
        std::vector<std::pair<std::string, std::string>> entries_;
    };

    /// %.17g, round-trips a double exactly.
    std::string format_double(double x);

    /// "rows x cols: v00 v01 ..." row-major at full precision.
    std::string format_matrix(const Eigen::MatrixXd &A);
    Eigen::MatrixXd parse_matrix(std::string_view text);

    std::uint64_t fnv1a64(std::string_view text);
    std::string hex64(std::uint64_t value);
}
