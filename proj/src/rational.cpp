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

#include "xnet/rational.hpp"

#include "xnet/errors.hpp"

#include <cctype>
#include <string>

namespace xnet
{
    Rational make_rational(long num, long den)
    {
        if (den == 0)
            throw ParameterError("rational with zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    std::string to_string(const Rational &q)
    {
        Rational c(q);
        c.canonicalize();
        return c.get_str();
    }

    double to_double(const Rational &q) { return q.get_d(); }

    namespace
    {
        bool all_digits(std::string_view s)
        {
            if (s.empty())
                return false;
            for (char c : s)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    return false;
            return true;
        }

        Rational parse_integer(std::string_view s)
        {
            bool neg = false;
            if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            {
                neg = s.front() == '-';
                s.remove_prefix(1);
            }
            if (!all_digits(s))
                throw InputError("not an integer: '" + std::string(s) + "'");
            mpz_class z(std::string(s), 10);
            return Rational(neg ? mpz_class(-z) : z);
        }
    }

    Rational parse_rational(std::string_view text)
    {
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
            text.remove_prefix(1);
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
            text.remove_suffix(1);
        if (text.empty())
            throw InputError("empty rational");

        if (auto slash = text.find('/'); slash != std::string_view::npos)
        {
            Rational num = parse_integer(text.substr(0, slash));
            Rational den = parse_integer(text.substr(slash + 1));
            if (den == 0)
                throw InputError("zero denominator in '" + std::string(text) + "'");
            Rational q = num / den;
            q.canonicalize();
            return q;
        }

        // Decimal with optional exponent, converted exactly.
        std::string_view mant = text;
        long exp10 = 0;
        if (auto e = text.find_first_of("eE"); e != std::string_view::npos)
        {
            exp10 = parse_integer(text.substr(e + 1)).get_num().get_si();
            mant = text.substr(0, e);
        }
        bool neg = false;
        if (!mant.empty() && (mant.front() == '-' || mant.front() == '+'))
        {
            neg = mant.front() == '-';
            mant.remove_prefix(1);
        }
        std::string digits;
        if (auto dot = mant.find('.'); dot != std::string_view::npos)
        {
            std::string_view ip = mant.substr(0, dot);
            std::string_view fp = mant.substr(dot + 1);
            if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
                throw InputError("malformed number '" + std::string(text) + "'");
            digits = std::string(ip) + std::string(fp);
            exp10 -= static_cast<long>(fp.size());
        }
        else
        {
            if (!all_digits(mant))
                throw InputError("malformed number '" + std::string(text) + "'");
            digits = std::string(mant);
        }
        mpz_class z(digits, 10);
        if (neg)
            z = -z;
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
        Rational q = exp10 < 0 ? Rational(z, scale) : Rational(z * scale);
        q.canonicalize();
        return q;
    }
}
