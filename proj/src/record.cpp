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

#include "xnet/record.hpp"

#include "xnet/errors.hpp"

#include <cerrno>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <sstream>

namespace xnet
{
    void Record::set(std::string key, std::string value)
    {
        if (key.empty() || key.find_first_of("=\n") != std::string::npos || value.find('\n') != std::string::npos)
            throw InputError("record key/value may not contain '=' in the key or newlines: " + key);
        for (auto &[k, v] : entries_)
            if (k == key)
            {
                v = std::move(value);
                return;
            }
        entries_.emplace_back(std::move(key), std::move(value));
    }

    void Record::set(std::string key, double value) { set(std::move(key), format_double(value)); }

    bool Record::has(std::string_view key) const
    {
        for (const auto &e : entries_)
            if (e.first == key)
                return true;
        return false;
    }

    const std::string &Record::get(std::string_view key) const
    {
        for (const auto &e : entries_)
            if (e.first == key)
                return e.second;
        throw InputError("record has no key '" + std::string(key) + "'");
    }

    long Record::get_long(std::string_view key) const
    {
        const std::string &s = get(key);
        char *end = nullptr;
        errno = 0;
        const long v = std::strtol(s.c_str(), &end, 10);
        if (s.empty() || *end != '\0' || errno != 0)
            throw InputError("record key '" + std::string(key) + "' is not an integer: " + s);
        return v;
    }

    double Record::get_double(std::string_view key) const
    {
        const std::string &s = get(key);
        char *end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (s.empty() || *end != '\0')
            throw InputError("record key '" + std::string(key) + "' is not a number: " + s);
        return v;
    }

    std::string Record::str() const
    {
        std::string out;
        for (const auto &[k, v] : entries_)
            out += k + "=" + v + "\n";
        return out;
    }

    Record Record::parse(std::istream &in)
    {
        Record r;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line))
        {
            ++lineno;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#')
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos || eq == 0)
                throw InputError("record line " + std::to_string(lineno) + " is not key=value");
            auto trim = [](std::string s) {
                const auto b = s.find_first_not_of(" \t");
                const auto e = s.find_last_not_of(" \t");
                return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
            };
            r.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        }
        return r;
    }

    std::string format_double(double x)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return buf;
    }

    std::string format_matrix(const Eigen::MatrixXd &A)
    {
        std::string out = std::to_string(A.rows()) + " x " + std::to_string(A.cols()) + ":";
        for (Eigen::Index r = 0; r < A.rows(); ++r)
            for (Eigen::Index c = 0; c < A.cols(); ++c)
                out += " " + format_double(A(r, c));
        return out;
    }

    Eigen::MatrixXd parse_matrix(std::string_view text)
    {
        std::istringstream in{std::string(text)};
        long rows = -1, cols = -1;
        std::string x;
        char colon = 0;
        if (!(in >> rows >> x >> cols >> colon) || x != "x" || colon != ':' || rows < 0 || cols < 0)
            throw InputError("malformed matrix header");
        Eigen::MatrixXd A(rows, cols);
        for (long r = 0; r < rows; ++r)
            for (long c = 0; c < cols; ++c)
            {
                std::string tok;
                if (!(in >> tok))
                    throw InputError("matrix has fewer entries than declared");
                char *end = nullptr;
                A(r, c) = std::strtod(tok.c_str(), &end);
                if (*end != '\0')
                    throw InputError("malformed matrix entry: " + tok);
            }
        std::string extra;
        if (in >> extra)
            throw InputError("matrix has more entries than declared");
        return A;
    }

    std::uint64_t fnv1a64(std::string_view text)
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : text)
        {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    std::string hex64(std::uint64_t value)
    {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016" PRIx64, value);
        return buf;
    }
}
