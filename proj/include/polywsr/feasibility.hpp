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

#ifndef POLYWSR_FEASIBILITY_HPP
#define POLYWSR_FEASIBILITY_HPP

#include "polywsr/common.hpp"

#include <optional>

namespace polywsr
{

// Answer to "is the SINR target vector achievable under the power budgets".
// When feasible, the witness reaches gamma_k >= target_k (1 - 1e-8).
struct FeasibilityOutcome
{
    bool feasible = false;
    std::optional<Allocation> witness;
};

// Indices k with target_k > 0.
std::vector<int> active_users(const RVec &target);

} // namespace polywsr

#endif
