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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace xnet
{
    /// Exact rational used for degrees-of-freedom bookkeeping and the exact simplex.
    using Rational = mpq_class;

    /// Canonical num/den (reduced, positive denominator).
    Rational make_rational(long num, long den = 1);

    /// "4/3", "-1/2" or "2" for integers.
    std::string to_string(const Rational &q);

    double to_double(const Rational &q);

    /// Parses "p/q", an integer, or a finite decimal such as "0.25" or "-1.5e-2"
    /// (decimals are converted exactly). Throws InputError on malformed text.
    Rational parse_rational(std::string_view text);
}
