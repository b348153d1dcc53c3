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

#include <iosfwd>
#include <string>
#include <vector>

namespace xnet::acceptance
{
    struct CriterionResult
    {
        int id = 0;
        std::string title;
        bool pass = false;
        std::string detail;
        double seconds = 0.0;
        double budget_seconds = 0.0; ///< 0: no runtime limit
    };

    constexpr int criterion_count = 8;

    /// Runs criterion id (1..8); exceptions are caught and reported as failures.
    CriterionResult run_criterion(int id);

    /// "PASS  3  reciprocity ... | detail | 0.41 s"
    std::string format_line(const CriterionResult &r);

    /// Runs the listed criteria (all when empty), printing one line each as they finish.
    std::vector<CriterionResult> run_suite(std::ostream &out, const std::vector<int> &ids = {});
}
