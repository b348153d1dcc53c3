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

#include "criteria.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv)
{
    CLI::App app{"xnet acceptance battery"};
    std::vector<int> ids;
    app.add_option("-c,--criterion", ids, "criterion ids to run (default: all)")
        ->check(CLI::Range(1, xnet::acceptance::criterion_count));
    CLI11_PARSE(app, argc, argv);

    const auto results = xnet::acceptance::run_suite(std::cout, ids);
    int failed = 0;
    for (const auto &r : results)
        failed += !r.pass;
    std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
