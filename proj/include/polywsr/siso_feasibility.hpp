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

#ifndef POLYWSR_SISO_FEASIBILITY_HPP
#define POLYWSR_SISO_FEASIBILITY_HPP

#include "polywsr/channel.hpp"
#include "polywsr/feasibility.hpp"

namespace polywsr::siso
{

// p = G p + eta is the SINR-tight power system for a target:
//   G(k, j) = target_k gain(k, j) / gain(k, k)  (j != k), G(k, k) = 0
//   eta_k   = target_k sigma_k^2 / gain(k, k)
struct NormalizedGainSystem
{
    RMat G;
    RVec eta;
};

NormalizedGainSystem normalize(const SisoChannel &ch, const RVec &target);

// Spectral radius threshold: rho(G) >= 1 - kRadiusGuard counts as infeasible.
inline constexpr double kRadiusGuard = 1e-12;

// (I - G)^{-1} eta, the componentwise smallest power meeting every target.
// Throws spectral_radius_at_least_one when no nonnegative solution exists.
RVec min_power(const NormalizedGainSystem &sys);

// Feasible iff rho(G) < 1 and min_power <= pmax. Users with a zero target are
// removed before forming G and get zero power.
FeasibilityOutcome check_feasible(const SisoChannel &ch, const RVec &target);

} // namespace polywsr::siso

#endif
