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
#include "polywsr/miso_feasibility.hpp"
#include "polywsr/oracles.hpp"
#include "polywsr/socp.hpp"
#include "support.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <numbers>

using namespace polywsr;
using namespace testsupport;

namespace
{

// Rx 1 hears tx 2 only on antenna 1, which tx 2 can avoid, and vice versa.
MisoChannel nullable_pair()
{
    std::vector<std::vector<CVec>> h{{cvec({1.0, 0.0}), cvec({1.0, 0.0})}, {cvec({0.0, 1.0}), cvec({0.0, 1.0})}};
    return MisoChannel(h, uniform_params(2, 1.0, 3.0));
}

void check_witness(const MisoChannel &ch, const RVec &target, const FeasibilityOutcome &out)
{
    REQUIRE(out.witness.has_value());
    const auto &v = out.witness->beamformers;
    for (int k = 0; k < ch.users(); ++k)
        CHECK(v[k].squaredNorm() <= ch.pmax()(k) + 1e-9);
    const RVec s = sinr_miso(ch, v);
    for (int k = 0; k < ch.users(); ++k)
        CHECK(s(k) >= target(k) * (1 - 1e-8));
}

} // namespace

TEST_CASE("cone program structure")
{
    SUBCASE("single user")
    {
        MisoChannel ch({{cvec({1.0, 1.0})}}, uniform_params(1, 1.0, 3.0));
        const auto prog = miso::build_cone_program(ch, RVec::Ones(1));
        CHECK(prog.dimension == 3);
        CHECK(prog.sinr_users.size() == 1);
        CHECK(prog.power_radius.size() == 1);
        CHECK(prog.power_radius[0] == doctest::Approx(std::sqrt(3.0)));
        CHECK(prog.cone_scale[0] == doctest::Approx(std::sqrt(2.0)));
    }
    SUBCASE("zero targets drop every SINR cone")
    {
        const MisoChannel ch = bench::random_miso(2, 2, 3, 1.0, 3.0);
        CHECK(miso::build_cone_program(ch, RVec::Zero(2)).sinr_users.empty());
        const FeasibilityOutcome out = miso::check_feasible(ch, RVec::Zero(2));
        REQUIRE(out.feasible);
        CHECK(out.witness->beamformers[0].norm() == 0.0);
    }
    SUBCASE("two users")
    {
        const MisoChannel ch = bench::random_miso(2, 2, 3, 0.25, 3.0);
        const auto prog = miso::build_cone_program(ch, RVec::Ones(2));
        REQUIRE(prog.E.size() == 2);
        const CMat &E = prog.E[0];
        CHECK(E.rows() == 3);
        CHECK(E.cols() == 5);
        CHECK((E.row(0).segment(0, 2).transpose() - ch.h(0, 0).conjugate()).norm() == 0.0);
        CHECK((E.row(1).segment(2, 2).transpose() - ch.h(0, 1).conjugate()).norm() == 0.0);
        CHECK(E.row(0).segment(2, 3).norm() == 0.0);
        CHECK(E.row(2).norm() == 0.0);
        CHECK(prog.noise_offset[0](2).real() == doctest::Approx(0.5));
        CHECK(prog.noise_offset[0].head(2).norm() == 0.0);
        const CMat L1 = prog.selector(1);
        CHECK(L1.rows() == 2);
        CHECK(L1(0, 2) == 1.0);
        CHECK(L1(1, 3) == 1.0);
        CHECK(L1.cwiseAbs().sum() == 2.0);
    }
    SUBCASE("json dump")
    {
        const MisoChannel ch = bench::random_miso(2, 2, 3, 1.0, 3.0);
        const auto doc = miso::to_json(miso::build_cone_program(ch, RVec::Ones(2)));
        CHECK(doc["dimension"] == 5);
        CHECK(doc["sinr_cones"].size() == 2);
        CHECK(doc["sinr_cones"][0]["E"].size() == 3);
    }
}

TEST_CASE("socp solver on a disc")
{
    // min -y0 - y1 subject to ||y|| <= 1.
    socp::Problem prob;
    prob.c = -RVec::Ones(2);
    prob.cones.push_back({RMat::Identity(2, 2), RVec::Zero(2), RVec::Zero(2), 1.0});
    prob.F = RMat::Zero(0, 2);
    const socp::Result r = socp::minimize(prob, RVec::Zero(2));
    CHECK(r.status == socp::Status::optimal);
    CHECK(r.objective == doctest::Approx(-std::numbers::sqrt2).epsilon(1e-8));
    CHECK(socp::min_cone_slack(prob, RVec::Zero(2)) == doctest::Approx(1.0));
}

TEST_CASE("check_feasible: single user MRT bound")
{
    MisoChannel ch({{cvec({1.0, cdouble(0.0, 1.0)})}}, uniform_params(1, 1.0, 3.0));
    const FeasibilityOutcome at = miso::check_feasible(ch, RVec::Constant(1, 6.0));
    REQUIRE(at.feasible);
    const CVec &v = at.witness->beamformers[0];
    const CVec mrt = std::sqrt(3.0) * ch.h(0, 0) / ch.h(0, 0).norm();
    CHECK(std::abs(std::abs(mrt.dot(v)) - 3.0) <= 1e-6);
    CHECK(miso::check_feasible(ch, RVec::Constant(1, 5.0)).feasible);
    CHECK_FALSE(miso::check_feasible(ch, RVec::Constant(1, 6.01)).feasible);
}

TEST_CASE("check_feasible: interference that can be nulled")
{
    const MisoChannel ch = nullable_pair();
    RVec t(2);
    t << 2.9, 2.9;
    const FeasibilityOutcome out = miso::check_feasible(ch, t);
    CHECK(out.feasible);
    check_witness(ch, t, out);
    t << 3.05, 1.0;
    CHECK_FALSE(miso::check_feasible(ch, t).feasible);
}

TEST_CASE("random witnesses never contradict an infeasible verdict")
{
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
    {
        const MisoChannel ch = bench::random_miso(2, 2, seed, 1.0, 3.0);
        const auto best = oracles::random_wsr_miso(ch, 2000, seed);
        const RVec target = best.sinr * 0.99;
        const FeasibilityOutcome out = miso::check_feasible(ch, target);
        CHECK(out.feasible);
        if (out.feasible)
            check_witness(ch, target, out);
    }
}

TEST_CASE("feasibility is monotone under target reduction")
{
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::uint64_t seed = 1; seed <= 6; ++seed)
    {
        const MisoChannel ch = bench::random_miso(3, 2, seed, 1.0, 3.0);
        const RVec target = RVec::NullaryExpr(3, [&](Eigen::Index) { return 2.0 * u(rng); });
        const RVec lower = target.cwiseProduct(RVec::NullaryExpr(3, [&](Eigen::Index) { return u(rng); }));
        if (miso::check_feasible(ch, target).feasible)
            CHECK(miso::check_feasible(ch, lower).feasible);
    }
}

TEST_CASE("rotating a direct channel leaves the decision unchanged")
{
    const MisoChannel ch = bench::random_miso(2, 2, 9, 1.0, 3.0);
    auto h = ch.channels();
    h[0][0] *= std::polar(1.0, 1.1);
    h[1][1] *= std::polar(1.0, -2.3);
    const MisoChannel rotated(h, ch.params());
    for (double scale : {0.3, 1.0, 3.0, 10.0})
    {
        const RVec t = RVec::Constant(2, scale);
        CHECK(miso::check_feasible(ch, t).feasible == miso::check_feasible(rotated, t).feasible);
    }
}
