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

#include "polywsr/simo_feasibility.hpp"
#include "polywsr/perron.hpp"
#include "polywsr/siso_feasibility.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace polywsr::simo
{

RMat extended_coupling(const SimoChannel &ch, const RVec &target, const std::vector<CVec> &receivers,
                       int budget_user)
{
    const int K = ch.users();
    require(target.size() == K && static_cast<int>(receivers.size()) == K, "size mismatch");
    require(budget_user >= 0 && budget_user < K, "budget user out of range");

    RMat A = RMat::Zero(K + 1, K + 1);
    for (int k = 0; k < K; ++k)
    {
        const CVec &w = receivers[k];
        const double d = target(k) / std::norm(w.dot(ch.h(k, k)));
        for (int j = 0; j < K; ++j)
            if (j != k)
                A(k, j) = d * std::norm(w.dot(ch.h(k, j)));
        A(k, K) = d * ch.noise()(k) * w.squaredNorm();
    }
    A.row(K) = A.row(budget_user) / ch.pmax()(budget_user);
    return A;
}

BalancingResult solve_subproblem(const SimoChannel &ch, const RVec &target, int budget_user, double tol,
                                 int max_iter)
{
    const int K = ch.users();
    require(target.size() == K, "target length must equal the user count");
    require(target.minCoeff() > 0, "balancing needs strictly positive targets");

    BalancingResult out;
    out.budget_user = budget_user;
    RVec p = RVec::Zero(K);
    double rho_prev = std::numeric_limits<double>::infinity();

    for (int n = 1; n <= max_iter; ++n)
    {
        std::vector<CVec> w = mmse_receivers(ch, p);
        const RMat A = extended_coupling(ch, target, w, budget_user);
        const PerronPair pair = perron_pair(A);
        const double last = pair.vector(K);
        if (!(last > 0))
            throw Error(ErrorCode::non_positive_eigenvector, "Perron vector has a non-positive last entry");
        RVec next = pair.vector.head(K) / last;
        if (next.minCoeff() <= 0)
            throw Error(ErrorCode::non_positive_eigenvector, "Perron vector has a non-positive power entry");

        out.radius_history.push_back(pair.radius);
        out.iterations = n;
        out.power = std::move(next);
        out.receivers = std::move(w);
        out.balance = 1.0 / pair.radius;
        if (rho_prev - pair.radius < tol)
            break;
        rho_prev = pair.radius;
        p = out.power;
    }
    return out;
}

bool within_budgets(const SimoChannel &ch, const BalancingResult &r)
{
    for (int k = 0; k < ch.users(); ++k)
        if (r.power(k) > ch.pmax()(k) * (1.0 + 1e-9))
            return false;
    return true;
}

BalancingResult solve_balancing(const SimoChannel &ch, const RVec &target, double tol)
{
    std::ostringstream diag;
    for (int i = 0; i < ch.users(); ++i)
    {
        BalancingResult r = solve_subproblem(ch, target, i, tol);
        if (within_budgets(ch, r))
            return r;
        diag << " [budget " << i << ": C=" << r.balance << ", max p/pmax="
             << r.power.cwiseQuotient(ch.pmax()).maxCoeff() << "]";
    }
    throw Error(ErrorCode::no_admissible_subproblem, "no balancing sub-problem respects all budgets:" + diag.str());
}

FeasibilityOutcome check_feasible(const SimoChannel &ch, const RVec &target)
{
    const int K = ch.users();
    require(target.size() == K, "target length must equal the user count");
    const std::vector<int> active = active_users(target);

    Allocation witness{RVec::Zero(K), std::vector<CVec>(K), {}};
    for (int k = 0; k < K; ++k)
        witness.receivers[k] = ch.h(k, k) / ch.noise()(k);
    if (active.empty())
        return {true, witness};

    const SimoChannel sub = ch.restrict_to(active);
    RVec sub_target(active.size());
    for (std::size_t a = 0; a < active.size(); ++a)
        sub_target(a) = target(active[a]);

    const BalancingResult bal = solve_balancing(sub, sub_target);
    if (bal.balance < 1.0 - kWitnessSlack)
        return {false, std::nullopt};

    RVec power = bal.power;
    if (bal.balance > 1.0)
    {
        // Receivers fixed: an effective single-antenna channel.
        const int n = sub.users();
        RMat gain(n, n);
        for (int k = 0; k < n; ++k)
        {
            const double wn = bal.receivers[k].squaredNorm();
            for (int j = 0; j < n; ++j)
                gain(k, j) = std::norm(bal.receivers[k].dot(sub.h(k, j))) / wn;
        }
        const SisoChannel eff(std::move(gain), sub.params());
        const FeasibilityOutcome tight = siso::check_feasible(eff, sub_target);
        if (tight.feasible)
            power = tight.witness->power;
    }
    for (std::size_t a = 0; a < active.size(); ++a)
    {
        witness.power(active[a]) = std::min(power(static_cast<Eigen::Index>(a)), ch.pmax()(active[a]));
        witness.receivers[active[a]] = bal.receivers[a];
    }
    return {true, witness};
}

} // namespace polywsr::simo
