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

#ifndef POLYWSR_PERRON_HPP
#define POLYWSR_PERRON_HPP

#include "polywsr/common.hpp"

namespace polywsr
{

struct PerronPair
{
    double radius = 0.0;
    RVec vector; // nonnegative, max-norm 1
    bool from_power_iteration = false;
};

// Spectral radius and Perron vector of a square nonnegative matrix.
//
// Runs power iteration on A + I from the all-ones vector and stops when the
// Collatz-Wielandt bounds  min_i (Ax)_i/x_i <= rho <= max_i (Ax)_i/x_i  agree
// to `rel_tol`. Matrices where this stalls (reducible or with a tiny spectral
// gap) fall back to a dense eigensolve.
PerronPair perron_pair(const RMat &A, double rel_tol = 1e-14, int max_iter = 500);

double spectral_radius(const RMat &A);

} // namespace polywsr

#endif
