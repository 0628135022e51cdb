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

#include "polywsr/siso_feasibility.hpp"
#include "polywsr/perron.hpp"

#include <cmath>

namespace polywsr
{

std::vector<int> active_users(const RVec &target)
{
    std::vector<int> out;
    for (Eigen::Index k = 0; k < target.size(); ++k)
        if (target(k) > 0)
            out.push_back(static_cast<int>(k));
    return out;
}

namespace siso
{

NormalizedGainSystem normalize(const SisoChannel &ch, const RVec &target)
{
    const int K = ch.users();
    require(target.size() == K, "target length must equal the user count");
    NormalizedGainSystem sys{RMat::Zero(K, K), RVec(K)};
    for (int k = 0; k < K; ++k)
    {
        require(std::isfinite(target(k)) && target(k) >= 0, "SINR targets must be finite and nonnegative");
        const double scale = target(k) / ch.gain(k, k);
        for (int j = 0; j < K; ++j)
            if (j != k)
                sys.G(k, j) = scale * ch.gain(k, j);
        sys.eta(k) = scale * ch.noise()(k);
    }
    return sys;
}

RVec min_power(const NormalizedGainSystem &sys)
{
    const Eigen::Index K = sys.G.rows();
    if (spectral_radius(sys.G) >= 1.0 - kRadiusGuard)
        throw Error(ErrorCode::spectral_radius_at_least_one, "rho(G) >= 1: the SINR target is not achievable");
    const RMat A = RMat::Identity(K, K) - sys.G;
    RVec p = A.partialPivLu().solve(sys.eta);
    // One step of iterative refinement keeps tight targets tight.
    p += A.partialPivLu().solve(sys.eta - A * p);
    if (p.size() > 0 && p.minCoeff() < 0)
        throw Error(ErrorCode::spectral_radius_at_least_one, "power solution has a negative entry");
    return p;
}

FeasibilityOutcome check_feasible(const SisoChannel &ch, const RVec &target)
{
    require(target.size() == ch.users(), "target length must equal the user count");
    const std::vector<int> active = active_users(target);
    Allocation witness{RVec::Zero(ch.users()), {}, {}};
    if (active.empty())
        return {true, witness};

    const SisoChannel sub = ch.restrict_to(active);
    RVec sub_target(active.size());
    for (std::size_t a = 0; a < active.size(); ++a)
        sub_target(a) = target(active[a]);

    const NormalizedGainSystem sys = normalize(sub, sub_target);
    RVec p;
    try
    {
        p = min_power(sys);
    }
    catch (const Error &e)
    {
        if (e.code() == ErrorCode::spectral_radius_at_least_one)
            return {false, std::nullopt};
        throw;
    }

    // Budgets are checked with a 1e-9 relative margin; a point inside the
    // margin is scaled back onto the budget, which costs less than 1e-9 SINR.
    double shrink = 1.0;
    for (Eigen::Index a = 0; a < p.size(); ++a)
    {
        const double cap = sub.pmax()(a);
        if (p(a) > cap * (1.0 + 1e-9))
            return {false, std::nullopt};
        if (p(a) > cap)
            shrink = std::min(shrink, cap / p(a));
    }
    p *= shrink;
    for (std::size_t a = 0; a < active.size(); ++a)
        witness.power(active[a]) = p(static_cast<Eigen::Index>(a));
    return {true, witness};
}

} // namespace siso
} // namespace polywsr
