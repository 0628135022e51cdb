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
#include "polywsr/perron.hpp"
#include "polywsr/simo_feasibility.hpp"
#include "support.hpp"

#include <Eigen/Eigenvalues>
#include <doctest.h>

using namespace polywsr;
using namespace testsupport;

namespace
{

double ratio_spread(const SimoChannel &ch, const RVec &target, const simo::BalancingResult &r)
{
    const RVec ratio = sinr_simo(ch, r.power, r.receivers).cwiseQuotient(target);
    return (ratio.array() - r.balance).abs().maxCoeff() / r.balance;
}

// Eigenvectors that can be scaled to be strictly positive.
int positive_eigenvectors(const RMat &A, double &value)
{
    Eigen::EigenSolver<RMat> es(A);
    int count = 0;
    for (int i = 0; i < A.rows(); ++i)
    {
        if (std::abs(es.eigenvalues()(i).imag()) > 1e-12)
            continue;
        CVec v = es.eigenvectors().col(i);
        // Rotate so the largest entry is real and positive.
        Eigen::Index big;
        v.cwiseAbs().maxCoeff(&big);
        v *= std::conj(v(big)) / std::abs(v(big));
        if (v.imag().cwiseAbs().maxCoeff() > 1e-9)
            continue;
        if (v.real().minCoeff() > 1e-12)
        {
            ++count;
            value = es.eigenvalues()(i).real();
        }
    }
    return count;
}

} // namespace

TEST_CASE("mmse_receivers")
{
    SimoChannel one({{cvec({1.0, cdouble(0.0, 2.0)})}}, uniform_params(1, 2.0, 3.0));
    const auto w = mmse_receivers(one, RVec::Ones(1));
    CHECK((w[0] - one.h(0, 0) / 2.0).norm() <= 1e-12);

    const SimoChannel ch = bench::random_simo(2, 2, 4, 0.5, 3.0);
    const auto w0 = mmse_receivers(ch, RVec::Zero(2));
    for (int k = 0; k < 2; ++k)
        CHECK((w0[k] - ch.h(k, k) / 0.5).norm() <= 1e-12);

    const RVec p = RVec::Constant(2, 1.3);
    const auto wk = mmse_receivers(ch, p);
    CHECK(max_rel_diff(sinr_simo(ch, p, wk), sinr_simo_mmse(ch, p).sinr) <= 1e-12);
}

TEST_CASE("extended coupling structure")
{
    const SimoChannel ch = bench::random_simo(3, 2, 6, 1.0, 3.0);
    const RVec target = RVec::Constant(3, 0.5);
    const auto w = mmse_receivers(ch, RVec::Ones(3));
    const RMat A = simo::extended_coupling(ch, target, w, 1);
    CHECK(A.minCoeff() >= 0);
    CHECK(A.diagonal().head(3).cwiseAbs().maxCoeff() == 0.0);
    CHECK(A.col(3).minCoeff() > 0);
    CHECK((A.row(3) - A.row(1) / 3.0).norm() <= 1e-15);
}

TEST_CASE("solve_subproblem: single user")
{
    SimoChannel ch({{cvec({1.0, 0.0})}}, uniform_params(1, 1.0, 3.0));
    const auto r = simo::solve_subproblem(ch, RVec::Constant(1, 2.0), 0);
    CHECK(r.balance == doctest::Approx(1.5));
    CHECK(r.power(0) == doctest::Approx(3.0));
}

TEST_CASE("solve_subproblem: decoupled users")
{
    SimoChannel ch(orthogonal_vectors(2), uniform_params(2, 1.0, 3.0));
    const auto r = simo::solve_subproblem(ch, RVec::Ones(2), 0);
    CHECK(r.balance == doctest::Approx(3.0));
    CHECK(r.power(0) == doctest::Approx(3.0));
    CHECK(r.power(1) == doctest::Approx(3.0));
}

TEST_CASE("solve_subproblem matches a grid over the free power")
{
    const SimoChannel ch = bench::random_simo(2, 2, 12, 1.0, 3.0);
    RVec target(2);
    target << 0.8, 1.4;
    for (int i = 0; i < 2; ++i)
    {
        const auto r = simo::solve_subproblem(ch, target, i);
        const int j = 1 - i;
        double best = 0.0;
        const int n = 20000;
        for (int s = 0; s <= n; ++s)
        {
            RVec p(2);
            p(i) = 3.0;
            p(j) = 3.0 * r.power(j) * s / n;
            best = std::max(best, sinr_simo_mmse(ch, p).sinr.cwiseQuotient(target).minCoeff());
        }
        CHECK(r.balance == doctest::Approx(best).epsilon(1e-4));
        CHECK(r.balance >= best * (1 - 1e-9));
    }
}

TEST_CASE("solve_balancing picks the binding budget")
{
    SUBCASE("single user")
    {
        SimoChannel ch({{cvec({1.0, 1.0})}}, uniform_params(1, 1.0, 3.0));
        CHECK(simo::solve_balancing(ch, RVec::Ones(1)).budget_user == 0);
    }
    SUBCASE("asymmetric budgets")
    {
        UserParams params{RVec::Ones(2), RVec(2), RVec::Ones(2)};
        params.pmax << 3.0, 0.5;
        SimoChannel tight(orthogonal_vectors(2), params);
        const auto first = simo::solve_subproblem(tight, RVec::Ones(2), 0);
        CHECK_FALSE(simo::within_budgets(tight, first));
        const auto r = simo::solve_balancing(tight, RVec::Ones(2));
        CHECK(r.budget_user == 1);
        CHECK(r.balance == doctest::Approx(0.5));
    }
}

TEST_CASE("check_feasible: single user boundary")
{
    SimoChannel ch({{cvec({1.0, 1.0})}}, uniform_params(1, 1.0, 3.0));
    const FeasibilityOutcome ok = simo::check_feasible(ch, RVec::Constant(1, 6.0));
    CHECK(ok.feasible);
    CHECK_FALSE(simo::check_feasible(ch, RVec::Constant(1, 7.0)).feasible);
}

TEST_CASE("check_feasible witness is tight and within budget")
{
    const SimoChannel ch = bench::random_simo(3, 2, 31, 1.0, 3.0);
    RVec target(3);
    target << 0.3, 0.0, 0.5;
    const FeasibilityOutcome out = simo::check_feasible(ch, target);
    REQUIRE(out.feasible);
    const Allocation &w = *out.witness;
    CHECK(w.power(1) == 0.0);
    CHECK((w.power.array() <= ch.pmax().array()).all());
    const RVec s = sinr_simo(ch, w.power, w.receivers);
    CHECK(s(0) == doctest::Approx(target(0)).epsilon(1e-8));
    CHECK(s(2) == doctest::Approx(target(2)).epsilon(1e-8));
}

TEST_CASE("random witnesses never contradict an infeasible verdict")
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
    {
        const SimoChannel ch = bench::random_simo(2, 2, seed, 1.0, 3.0);
        const auto found = oracles::random_wsr_simo(ch, 2000, seed);
        const RVec target = found.sinr * 0.999;
        CHECK(simo::check_feasible(ch, target).feasible);
        const auto search = oracles::random_search_simo(ch, target * 1.5, 5000, seed);
        if (search.found)
            CHECK(simo::check_feasible(ch, target * 1.5).feasible);
    }
}

TEST_CASE("balancing invariants on random instances")
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
    {
        const int K = seed % 2 ? 2 : 3;
        const SimoChannel ch = bench::random_simo(K, 2, seed, 1.0, 3.0);
        const RVec target = RVec::Constant(K, 0.5 + 0.1 * static_cast<double>(seed));
        int admissible = 0;
        for (int i = 0; i < K; ++i)
        {
            const auto r = simo::solve_subproblem(ch, target, i);
            for (std::size_t n = 1; n < r.radius_history.size(); ++n)
                CHECK(r.radius_history[n] <= r.radius_history[n - 1] * (1 + 1e-12));
            CHECK(ratio_spread(ch, target, r) <= 1e-6);
            CHECK(r.power(i) == doctest::Approx(ch.pmax()(i)).epsilon(1e-9));
            admissible += simo::within_budgets(ch, r);

            const RMat A = simo::extended_coupling(ch, target, r.receivers, i);
            double value = 0.0;
            CHECK(positive_eigenvectors(A, value) == 1);
            CHECK(value == doctest::Approx(spectral_radius(A)).epsilon(1e-9));
        }
        CHECK(admissible == 1);
    }
}

TEST_CASE("scaling an infeasible target up keeps it infeasible")
{
    const SimoChannel ch = bench::random_simo(3, 2, 44, 1.0, 3.0);
    RVec target = RVec::Constant(3, 0.5);
    while (simo::check_feasible(ch, target).feasible)
        target *= 1.5;
    for (double c : {1.0, 1.01, 1.5, 3.0})
        CHECK_FALSE(simo::check_feasible(ch, target * c).feasible);
}
