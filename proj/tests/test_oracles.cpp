// SPDX-License-Identifier: Apache-2.0
//
// polywsr: globally optimal weighted sum-rate for Gaussian interference channels
// Copyright (C) 2026 The polywsr Authors
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

#include "polywsr/bench.hpp"
#include "polywsr/oracles.hpp"
#include "polywsr/simo_feasibility.hpp"
#include "polywsr/wsr.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace polywsr;
using namespace testsupport;

TEST_CASE("grid_wsr_siso")
{
    SisoChannel one(RMat::Constant(1, 1, 1.0), uniform_params(1, 1.0, 3.0));
    const auto r1 = oracles::grid_wsr_siso(one, 11);
    CHECK(r1.power(0) == 3.0);
    CHECK(r1.wsr == doctest::Approx(2.0));

    SisoChannel two(RMat::Identity(2, 2), uniform_params(2, 1.0, 3.0));
    const auto r2 = oracles::grid_wsr_siso(two, 11);
    CHECK(r2.power == RVec::Constant(2, 3.0));
    CHECK(r2.wsr == doctest::Approx(4.0));
}

TEST_CASE("grid refinement never lowers the optimum")
{
    const SisoChannel ch = bench::random_siso(3, 4, 1.0, 3.0);
    double last = -1;
    for (int n : {3, 5, 9, 17, 33})
    {
        const double w = oracles::grid_wsr_siso(ch, n).wsr;
        CHECK(w >= last);
        last = w;
    }
}

TEST_CASE("grid respects minimum rates and the size guard")
{
    const SisoChannel ch = bench::random_siso(2, 4, 1.0, 3.0);
    const RVec rmin = RVec::Constant(2, 0.3);
    const auto r = oracles::grid_wsr_siso(ch, 41, rmin);
    CHECK((rate_of(sinr_siso(ch, r.power)).array() >= 0.3).all());
    const SisoChannel coupled(RMat::Ones(2, 2), uniform_params(2, 1.0, 3.0));
    CHECK(oracles::grid_wsr_siso(coupled, 41, RVec::Constant(2, 1.5)).wsr == -std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(oracles::grid_wsr_siso(ch, 1000, std::nullopt, 1000), Error);
}

TEST_CASE("grid agrees with the solver on the bundled four-user example")
{
    const SisoChannel ch = bench::bundled_channel(bench::weak_four_user_gain());
    const RVec rmin = RVec::Constant(4, 0.5);
    const auto grid = oracles::grid_wsr_siso(ch, 21, rmin);
    WsrOptions opt;
    opt.eta = 0.5;
    opt.rmin = rmin;
    const SolveResult res = solve_wsr(ch, opt);
    CHECK(std::abs(res.best_value - grid.wsr) <= opt.eta);
    CHECK(res.upper_bound >= grid.wsr);
}

TEST_CASE("random search on a single MISO user")
{
    MisoChannel ch({{cvec({1.0, cdouble(0.5, -0.5)})}}, uniform_params(1, 1.0, 3.0));
    const auto r = oracles::random_wsr_miso(ch, 10000, 1);
    CHECK(r.value >= 0.99 * initial_vertex(ch)(0));
    CHECK(r.value <= initial_vertex(ch)(0) + 1e-12);

    const double cap = 3.0 * ch.h(0, 0).squaredNorm();
    CHECK_FALSE(oracles::random_search_miso(ch, RVec::Constant(1, cap * 1.01), 10000, 1).found);
}

TEST_CASE("random search is bounded by the balancing value")
{
    for (std::uint64_t seed = 1; seed <= 3; ++seed)
    {
        const SimoChannel ch = bench::random_simo(2, 2, seed, 1.0, 3.0);
        const RVec target = RVec::Constant(2, 1.0);
        const auto bal = simo::solve_balancing(ch, target);
        const auto found = oracles::random_search_simo(ch, target, 20000, seed);
        CHECK(found.value <= bal.balance + 1e-3);
        CHECK(found.found == (found.value >= 1.0));
    }
}

TEST_CASE("random search is reproducible")
{
    const MisoChannel ch = bench::random_miso(2, 2, 5, 1.0, 3.0);
    const auto a = oracles::random_wsr_miso(ch, 500, 42);
    const auto b = oracles::random_wsr_miso(ch, 500, 42);
    CHECK(a.value == b.value);
}

TEST_CASE("finite_diff")
{
    const RVec x = RVec::Ones(1);
    CHECK(oracles::finite_diff([](const RVec &y) { return y(0) * y(0); }, x, 1e-6)(0) ==
          doctest::Approx(2.0).epsilon(1e-6));
    CHECK(oracles::finite_diff([](const RVec &) { return 4.0; }, RVec::Ones(3), 1e-6).norm() == 0.0);
}
