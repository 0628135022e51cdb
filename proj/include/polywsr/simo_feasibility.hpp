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

#ifndef POLYWSR_SIMO_FEASIBILITY_HPP
#define POLYWSR_SIMO_FEASIBILITY_HPP

#include "polywsr/channel.hpp"
#include "polywsr/feasibility.hpp"

namespace polywsr::simo
{

/// (K+1)x(K+1) matrix whose Perron root is 1/C for fixed receivers W and the
/// single budget of user `budget_user`:
///
///     [ D Psi(W)              D s         ]
///     [ e_i^T D Psi(W) / P_i  e_i^T D s / P_i ]
///
/// with D = diag(target_k / |w_k^H h_kk|^2), Psi(k, j) = |w_k^H h_kj|^2 off the
/// diagonal and s_k = sigma_k^2 ||w_k||^2.
RMat extended_coupling(const SimoChannel &ch, const RVec &target, const std::vector<CVec> &receivers,
                       int budget_user);

struct BalancingResult
{
    double balance = 0.0;            // C: every gamma_k / target_k equals it
    RVec power;                      // p_{budget_user} == pmax(budget_user)
    std::vector<CVec> receivers;     // MMSE receivers that p was balanced for
    int budget_user = 0;
    int iterations = 0;
    std::vector<double> radius_history; // rho^(n), non-increasing
};

/// Alternates MMSE receivers and the Perron vector of the extended coupling
/// matrix, starting from p = 0, until the Perron root drops by less than tol.
/// Requires every target to be positive.
BalancingResult solve_subproblem(const SimoChannel &ch, const RVec &target, int budget_user,
                                 double tol = 1e-8, int max_iter = 10000);

/// True when the sub-problem's powers respect all budgets (1e-9 relative).
bool within_budgets(const SimoChannel &ch, const BalancingResult &r);

/// Max-min SINR balancing under per-user budgets: sub-problems are solved
/// for budget_user = 0, 1, ... and the first one within all budgets is
/// returned. Throws no_admissible_subproblem when none is.
BalancingResult solve_balancing(const SimoChannel &ch, const RVec &target, double tol = 1e-8);

/// Feasible iff the balancing value is at least 1. The witness powers are the
/// smallest ones meeting the targets with the final receivers held fixed.
FeasibilityOutcome check_feasible(const SimoChannel &ch, const RVec &target);

} // namespace polywsr::simo

#endif
