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

#include "xnet/schemes.hpp"

#include <iosfwd>

namespace xnet
{
    /// Plan as a flat record: dimensions, kind, a stream table and the V / U matrices.
    void write_plan(std::ostream &out, const BeamformingPlan &plan);

    /// Inverse of write_plan. Throws InputError on missing keys or inconsistent shapes.
    BeamformingPlan read_plan(std::istream &in);
}
