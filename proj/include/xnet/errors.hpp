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

#include <stdexcept>
#include <string>

namespace xnet
{
    /// Base of every exception thrown by the toolkit.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// A numeric argument is outside its documented domain.
    class ParameterError : public Error
    {
    public:
        using Error::Error;
    };

    /// A request reaches past generated data (e.g. an extension block beyond the horizon).
    class RangeError : public Error
    {
    public:
        using Error::Error;
    };

    /// Zero channel gain or zero seed entry where the construction needs non-zeros.
    class DegeneracyError : public Error
    {
    public:
        using Error::Error;
    };

    /// Malformed input data (non-finite entries, unparsable records).
    class InputError : public Error
    {
    public:
        using Error::Error;
    };

    /// Operation called on an object in the wrong state (e.g. dualising an unverified plan).
    class StateError : public Error
    {
    public:
        using Error::Error;
    };

    /// Structural validation failed (invalid delay schedule, stream pairing mismatch).
    class ValidationError : public Error
    {
    public:
        using Error::Error;
    };

    /// A per-receiver decoding matrix is numerically singular.
    class RankFailure : public Error
    {
    public:
        RankFailure(int receiver, double ratio, const std::string &what)
            : Error(what), receiver_(receiver), ratio_(ratio) {}

        int receiver() const noexcept { return receiver_; }
        double singular_value_ratio() const noexcept { return ratio_; }

    private:
        int receiver_;
        double ratio_;
    };
}
