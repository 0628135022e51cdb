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

#include "polywsr/wsr.hpp"

#include <set>

namespace polywsr
{

namespace
{

SolveResult solve_full(const Channel &ch, const RVec &origin, const WsrOptions &opt,
                       const IterationObserver &observer)
{
    PolyblockConfig cfg;
    cfg.epsilon = opt.epsilon;
    cfg.eta = opt.eta;
    cfg.max_iterations = opt.max_iterations;
    cfg.origin = origin;
    cfg.prune_dominated = opt.prune_dominated;
    return solve(make_boundary_oracle(ch, origin, opt.tol_bits), cfg, initial_vertex(ch), params_of(ch).weights,
                 observer);
}

Channel restrict_channel(const Channel &ch, const std::vector<int> &users)
{
    return std::visit([&](const auto &c) -> Channel { return c.restrict_to(users); }, ch);
}

// Embeds an allocation of the sub-channel on `users` into the full channel;
// everyone else is silent.
Allocation lift(const Channel &ch, const std::vector<int> &users, const Allocation &a)
{
    const int K = users_of(ch);
    Allocation out;
    out.power = RVec::Zero(K);
    for (std::size_t i = 0; i < users.size(); ++i)
        out.power(users[i]) = a.power(static_cast<Eigen::Index>(i));
    if (const auto *simo = std::get_if<SimoChannel>(&ch))
    {
        out.receivers.resize(K);
        for (int k = 0; k < K; ++k)
            out.receivers[k] = simo->h(k, k) / simo->noise()(k);
        for (std::size_t i = 0; i < users.size(); ++i)
            out.receivers[users[i]] = a.receivers[i];
    }
    if (const auto *miso = std::get_if<MisoChannel>(&ch))
    {
        out.beamformers.resize(K);
        for (int k = 0; k < K; ++k)
            out.beamformers[k] = CVec::Zero(miso->antennas(k));
        for (std::size_t i = 0; i < users.size(); ++i)
            out.beamformers[users[i]] = a.beamformers[i];
    }
    return out;
}

RVec lift(int K, const std::vector<int> &users, const RVec &r)
{
    RVec out = RVec::Zero(K);
    for (std::size_t i = 0; i < users.size(); ++i)
        out(users[i]) = r(static_cast<Eigen::Index>(i));
    return out;
}

// `active` lists the users of `full` still on; `origin` is indexed like full.
void explore(const Channel &full, const std::vector<int> &active, const RVec &origin, const SolveResult &at,
             const WsrOptions &opt, std::set<std::vector<int>> &visited, SolveResult &best)
{
    const int n = static_cast<int>(active.size());
    if (n < 2)
        return;
    for (int i = 0; i < n; ++i)
    {
        if (origin(active[i]) > 0 || !(at.strip_value(i) > best.best_value + opt.eta))
            continue;
        std::vector<int> rest;
        for (int j = 0; j < n; ++j)
            if (j != i)
                rest.push_back(active[j]);
        if (!visited.insert(rest).second)
            continue;

        const Channel sub = restrict_channel(full, rest);
        RVec sub_origin(rest.size());
        for (std::size_t j = 0; j < rest.size(); ++j)
            sub_origin(static_cast<Eigen::Index>(j)) = origin(rest[j]);
        const SolveResult res = solve_full(sub, sub_origin, opt, {});
        best.face_iterations += res.iterations;
        best.upper_bound = std::max(best.upper_bound, res.upper_bound);
        if (res.best_value > best.best_value)
        {
            best.best_value = res.best_value;
            best.best_point = lift(users_of(full), rest, res.best_point);
            best.witness = lift(full, rest, res.witness);
        }
        explore(full, rest, origin, res, opt, visited, best);
    }
}

} // namespace

SolveResult solve_wsr(const Channel &ch, const WsrOptions &opt, const IterationObserver &observer)
{
    const int K = users_of(ch);
    RVec origin = RVec::Zero(K);
    if (opt.rmin)
        origin = MinRateConstraint(ch, *opt.rmin).rates();

    SolveResult res = solve_full(ch, origin, opt, observer);
    if (opt.explore_faces)
    {
        std::vector<int> all(K);
        for (int k = 0; k < K; ++k)
            all[k] = k;
        std::set<std::vector<int>> visited;
        const SolveResult top = res;
        explore(ch, all, origin, top, opt, visited, res);
    }
    return res;
}

} // namespace polywsr
