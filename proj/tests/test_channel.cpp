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
#include "polywsr/channel.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace polywsr;
using namespace testsupport;

TEST_CASE("sinr_siso single user")
{
    SisoChannel ch(RMat::Constant(1, 1, 1.0), uniform_params(1, 1.0, 3.0));
    CHECK(sinr_siso(ch, RVec::Constant(1, 2.0))(0) == doctest::Approx(2.0));
}

TEST_CASE("sinr_siso two users")
{
    RMat g(2, 2);
    g << 1.0, 0.5, 0.5, 1.0;
    SisoChannel ch(g, uniform_params(2, 1.0, 3.0));
    RVec p(2);
    p << 1.0, 2.0;
    CHECK(sinr_siso(ch, p)(0) == doctest::Approx(0.5));
}

TEST_CASE("sinr_siso bundled four-user gains")
{
    const SisoChannel ch = bench::bundled_channel(bench::weak_four_user_gain(), 0.1, 3.0);
    const RVec g = sinr_siso(ch, RVec::Constant(4, 3.0));
    CHECK(g(0) == doctest::Approx(1.293 / (3.0 * (0.0022 + 0.0105 + 0.0042) + 0.1)).epsilon(1e-12));
}

TEST_CASE("sinr_simo_mmse matched filter")
{
    SimoChannel ch({{cvec({1.0, 1.0})}}, uniform_params(1, 1.0, 3.0));
    CHECK(sinr_simo_mmse(ch, RVec::Ones(1)).sinr(0) == doctest::Approx(2.0));
}

TEST_CASE("sinr_simo_mmse orthogonal users decouple")
{
    std::mt19937_64 rng(3);
    std::vector<std::vector<CVec>> h(2, std::vector<CVec>(2));
    h[0][0] = random_cvec(2, rng);
    h[1][1] = random_cvec(2, rng);
    h[0][1] = CVec::Zero(2);
    h[1][0] = CVec::Zero(2);
    SimoChannel ch(h, uniform_params(2, 0.5, 3.0));
    RVec p(2);
    p << 1.5, 2.5;
    const RVec s = sinr_simo_mmse(ch, p).sinr;
    CHECK(s(0) == doctest::Approx(1.5 * h[0][0].squaredNorm() / 0.5));
    CHECK(s(1) == doctest::Approx(2.5 * h[1][1].squaredNorm() / 0.5));
}

TEST_CASE("MMSE receivers beat a grid over the unit sphere")
{
    const SimoChannel ch = bench::random_simo(2, 2, 11, 1.0, 3.0);
    const RVec p = RVec::Ones(2);
    const RVec best = sinr_simo_mmse(ch, p).sinr;
    RVec grid = RVec::Zero(2);
    // w = (cos t, sin t e^{i phi}) covers the sphere up to a global phase.
    const int n = 200;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b < n; ++b)
        {
            const double t = 0.5 * std::numbers::pi * a / n;
            const double phi = 2.0 * std::numbers::pi * b / n;
            CVec w(2);
            w << std::cos(t), std::sin(t) * std::polar(1.0, phi);
            const RVec s = sinr_simo(ch, p, {w, w});
            grid = grid.cwiseMax(s);
        }
    for (int k = 0; k < 2; ++k)
    {
        CHECK(grid(k) <= best(k) * (1 + 1e-9));
        CHECK(grid(k) >= best(k) * (1 - 1e-3));
    }
}

TEST_CASE("MMSE dominates random receivers")
{
    const SimoChannel ch = bench::random_simo(3, 2, 5, 1.0, 3.0);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (int trial = 0; trial < 50; ++trial)
    {
        const RVec p = RVec::NullaryExpr(3, [&](Eigen::Index) { return u(rng); });
        const RVec best = sinr_simo_mmse(ch, p).sinr;
        std::vector<CVec> w;
        for (int k = 0; k < 3; ++k)
            w.push_back(random_cvec(2, rng).normalized());
        const RVec s = sinr_simo(ch, p, w);
        for (int k = 0; k < 3; ++k)
            CHECK(s(k) <= best(k) * (1 + 1e-9));
    }
}

TEST_CASE("sinr_miso single user MRT")
{
    const CVec h = cvec({1.0, 1.0});
    MisoChannel ch({{h}}, uniform_params(1, 1.0, 3.0));
    const CVec v = std::sqrt(3.0) * h / h.norm();
    CHECK(sinr_miso(ch, {v})(0) == doctest::Approx(6.0));
}

TEST_CASE("sinr_miso matches a direct evaluation")
{
    const MisoChannel ch = bench::random_miso(2, 2, 4, 1.0, 3.0);
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial)
    {
        std::vector<CVec> v{random_cvec(2, rng).normalized(), random_cvec(2, rng).normalized() * 1.5};
        const RVec s = sinr_miso(ch, v);
        for (int k = 0; k < 2; ++k)
        {
            cdouble sig = 0.0;
            for (int i = 0; i < 2; ++i)
                sig += std::conj(ch.h(k, k)(i)) * v[k](i);
            cdouble leak = 0.0;
            for (int i = 0; i < 2; ++i)
                leak += std::conj(ch.h(k, 1 - k)(i)) * v[1 - k](i);
            CHECK(s(k) == doctest::Approx(std::norm(sig) / (std::norm(leak) + 1.0)).epsilon(1e-12));
        }
    }
}

TEST_CASE("sinr_miso silent user and budget check")
{
    const MisoChannel ch = bench::random_miso(2, 2, 4, 1.0, 3.0);
    const RVec s = sinr_miso(ch, {CVec::Zero(2), CVec::Ones(2)});
    CHECK(s(0) == 0.0);
    CHECK_THROWS_AS(sinr_miso(ch, {CVec::Ones(2) * 2.0, CVec::Zero(2)}), Error);
}

TEST_CASE("rate_of")
{
    RVec g(3);
    g << 0.0, 1.0, 3.0;
    const RVec r = rate_of(g);
    CHECK(r(0) == 0.0);
    CHECK(r(1) == doctest::Approx(1.0));
    CHECK(r(2) == doctest::Approx(2.0));
}

TEST_CASE("initial_vertex")
{
    SisoChannel one(RMat::Constant(1, 1, 1.0), uniform_params(1, 1.0, 3.0));
    CHECK(initial_vertex(one)(0) == doctest::Approx(2.0));

    MisoChannel miso({{cvec({1.0, 1.0})}}, uniform_params(1, 1.0, 3.0));
    CHECK(initial_vertex(miso)(0) == doctest::Approx(std::log2(7.0)));

    const SisoChannel bundled = bench::bundled_channel(bench::weak_four_user_gain(), 0.1, 3.0);
    CHECK(initial_vertex(bundled)(0) == doctest::Approx(std::log2(1 + 3 * 0.431 / 0.1)));
}

TEST_CASE("random allocations stay inside the initial box")
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const SisoChannel siso = bench::random_siso(3, 1, 1.0, 3.0);
    const SimoChannel simo = bench::random_simo(3, 2, 1, 1.0, 3.0);
    const MisoChannel miso = bench::random_miso(3, 2, 1, 1.0, 3.0);
    for (int trial = 0; trial < 100; ++trial)
    {
        const RVec p = RVec::NullaryExpr(3, [&](Eigen::Index) { return 3.0 * u(rng); });
        CHECK((rate_of(sinr_siso(siso, p)).array() <= initial_vertex(siso).array() + 1e-12).all());
        CHECK((rate_of(sinr_simo_mmse(simo, p).sinr).array() <= initial_vertex(simo).array() + 1e-12).all());
        std::vector<CVec> v;
        for (int k = 0; k < 3; ++k)
            v.push_back(random_cvec(2, rng).normalized() * std::sqrt(p(k)));
        CHECK((rate_of(sinr_miso(miso, v)).array() <= initial_vertex(miso).array() + 1e-12).all());
    }
}

TEST_CASE("SINR is monotone in own power")
{
    const SisoChannel siso = bench::random_siso(3, 2, 1.0, 3.0);
    const SimoChannel simo = bench::random_simo(3, 2, 2, 1.0, 3.0);
    RVec p = RVec::Ones(3);
    for (int k = 0; k < 3; ++k)
    {
        RVec q = p;
        q(k) = 2.0;
        CHECK(sinr_siso(siso, q)(k) >= sinr_siso(siso, p)(k));
        CHECK(sinr_simo_mmse(simo, q).sinr(k) >= sinr_simo_mmse(simo, p).sinr(k));
    }
}

TEST_CASE("channel validation")
{
    CHECK_THROWS_AS(SisoChannel(RMat::Ones(2, 3), uniform_params(2, 1.0, 1.0)), Error);
    CHECK_THROWS_AS(SisoChannel(RMat::Ones(2, 2), uniform_params(3, 1.0, 1.0)), Error);
    CHECK_THROWS_AS(SisoChannel(RMat::Ones(1, 1), uniform_params(1, 0.0, 1.0)), Error);
    SisoChannel ok(RMat::Ones(2, 2), uniform_params(2, 1.0, 3.0));
    CHECK_THROWS_AS(MinRateConstraint(ok, RVec::Constant(2, 5.0)), Error);
    CHECK_NOTHROW(MinRateConstraint(ok, RVec::Constant(2, 0.5)));
}

TEST_CASE("restrict_to keeps the listed users")
{
    const SisoChannel ch = bench::bundled_channel(bench::weak_four_user_gain());
    const SisoChannel sub = ch.restrict_to({1, 3});
    REQUIRE(sub.users() == 2);
    CHECK(sub.gain(0, 1) == ch.gain(1, 3));
    CHECK(sub.gain(1, 0) == ch.gain(3, 1));
}
