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

#ifndef POLYWSR_WSR_HPP
#define POLYWSR_WSR_HPP

#include "polywsr/boundary.hpp"
#include "polywsr/channel.hpp"
#include "polywsr/polyblock.hpp"

#include <optional>

namespace polywsr
{

struct WsrOptions
{
    double epsilon = 0.01;
    double eta = 0.1;
    double tol_bits = kDefaultBisectionTol;
    int max_iterations = 50000;
    std::optional<RVec> rmin;
    bool prune_dominated = true;
    // Points with some r_k in (0, epsilon) are never examined, so an optimum
    // with a user switched off can be missed by up to the strip width's
    // effect on the others. When set, users without a minimum rate whose
    // strip still holds a promising vertex are switched off and the smaller
    // channel is solved as well.
    bool explore_faces = true;
};

/// (epsilon, eta)-optimal weighted sum-rate point of the channel, optionally
/// subject to minimum rates. The observer sees the full-channel run only.
SolveResult solve_wsr(const Channel &ch, const WsrOptions &opt, const IterationObserver &observer = {});

} // namespace polywsr

#endif
