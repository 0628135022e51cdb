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

#ifndef POLYWSR_SOCP_HPP
#define POLYWSR_SOCP_HPP

#include "polywsr/common.hpp"

#include <functional>

namespace polywsr::socp
{

// ||A y + b|| <= f^T y + d
struct Cone
{
    RMat A;
    RVec b;
    RVec f;
    double d = 0.0;
};

// minimize c^T y  subject to every cone and F y = 0.
struct Problem
{
    RVec c;
    std::vector<Cone> cones;
    RMat F; // may have zero rows
};

struct Options
{
    double gap_tol = 1e-10;   // stop when the barrier gap nu/t drops below this
    double t0 = 1.0;
    double t_factor = 100;
    int max_newton = 200; // per centering step
    double newton_tol = 1e-11; // lambda^2 / 2 at which centering stops
};

enum class Status
{
    optimal,   // gap below gap_tol
    stopped,   // the caller's predicate asked to stop
    failure    // no progress or iteration budget exhausted
};

struct Result
{
    Status status = Status::failure;
    RVec y;
    double objective = 0.0;
    double lower_bound = 0.0; // c^T y - nu/t after the last centering
    int newton_steps = 0;
};

// Called after every Newton step with (objective, lower bound, y); the lower
// bound is -inf away from centered points. Returning true stops the solve
// with Status::stopped.
using StopPredicate = std::function<bool(double, double, const RVec &)>;

/// Log-barrier path following for a small second-order cone program.
/// `y0` must satisfy F y0 = 0 and lie strictly inside every cone. Equality
/// constraints are eliminated through an orthonormal null-space basis.
Result minimize(const Problem &prob, const RVec &y0, const Options &opt = {}, const StopPredicate &stop = {});

/// Smallest value of f^T y + d - ||A y + b|| over the cones (positive inside).
double min_cone_slack(const Problem &prob, const RVec &y);

} // namespace polywsr::socp

#endif
