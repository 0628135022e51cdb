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

#include "polywsr/oracles.hpp"

#include <cmath>
#include <random>

namespace polywsr::oracles
{

GridResult grid_wsr_siso(const SisoChannel &ch, int points_per_dim, const std::optional<RVec> &rmin, long long cap)
{
    const int K = ch.users();
    require(points_per_dim >= 2, "grid needs at least two points per dimension");
    RVec floor_rates = RVec::Zero(K);
    if (rmin)
        floor_rates = MinRateConstraint(ch, *rmin).rates();

    double total = 1.0;
    for (int k = 0; k < K; ++k)
        total *= points_per_dim;
    if (total > static_cast<double>(cap))
        throw Error(ErrorCode::resource_limit, "power grid exceeds the configured size cap");

    GridResult best;
    auto consider = [&](const RVec &p) {
        ++best.evaluated;
        const RVec rates = rate_of(sinr_siso(ch, p));
        if (((rates - floor_rates).array() < -1e-12).any())
            return;
        const double wsr = ch.weights().dot(rates);
        if (wsr > best.wsr)
        {
            best.wsr = wsr;
            best.power = p;
        }
    };

    // Two users: the optimum is known to sit on {0, P}^2, a cheap first bound.
    if (K == 2)
        for (int c = 0; c < 4; ++c)
            consider(RVec{{(c & 1) ? ch.pmax()(0) : 0.0, (c & 2) ? ch.pmax()(1) : 0.0}});

    std::vector<int> idx(K, 0);
    RVec p = RVec::Zero(K);
    const double steps = points_per_dim - 1;
    while (true)
    {
        for (int k = 0; k < K; ++k)
            p(k) = ch.pmax()(k) * idx[k] / steps;
        consider(p);
        int k = 0;
        while (k < K && ++idx[k] == points_per_dim)
            idx[k++] = 0;
        if (k == K)
            break;
    }
    return best;
}

namespace
{

CVec sphere_point(int n, std::mt19937_64 &rng)
{
    std::normal_distribution<double> normal;
    CVec v(n);
    for (int i = 0; i < n; ++i)
        v(i) = cdouble(normal(rng), normal(rng));
    return v / v.norm();
}

RVec uniform_powers(const RVec &pmax, std::mt19937_64 &rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    RVec p(pmax.size());
    for (Eigen::Index k = 0; k < p.size(); ++k)
        p(k) = pmax(k) * unit(rng);
    return p;
}

std::vector<CVec> random_beams(const MisoChannel &ch, std::mt19937_64 &rng)
{
    const RVec p = uniform_powers(ch.pmax(), rng);
    std::vector<CVec> v(ch.users());
    for (int k = 0; k < ch.users(); ++k)
        v[k] = std::sqrt(p(k)) * sphere_point(ch.antennas(k), rng);
    return v;
}

double min_ratio(const RVec &sinr, const RVec &target)
{
    double r = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < sinr.size(); ++k)
        if (target(k) > 0)
            r = std::min(r, sinr(k) / target(k));
    return r;
}

void keep_if_better(SearchResult &best, double value, Allocation a, const RVec &sinr)
{
    if (value > best.value)
    {
        best.value = value;
        best.allocation = std::move(a);
        best.sinr = sinr;
    }
}

} // namespace

SearchResult random_search_simo(const SimoChannel &ch, const RVec &target, long long samples, std::uint64_t seed)
{
    require(target.size() == ch.users() && target.minCoeff() >= 0, "target must be nonnegative, one per user");
    std::mt19937_64 rng(seed);
    SearchResult best;
    for (long long s = 0; s < samples; ++s)
    {
        RVec p = uniform_powers(ch.pmax(), rng);
        MmseSinr m = sinr_simo_mmse(ch, p);
        keep_if_better(best, min_ratio(m.sinr, target), Allocation{std::move(p), std::move(m.receivers), {}}, m.sinr);
    }
    best.found = best.value >= 1.0;
    return best;
}

SearchResult random_search_miso(const MisoChannel &ch, const RVec &target, long long samples, std::uint64_t seed)
{
    require(target.size() == ch.users() && target.minCoeff() >= 0, "target must be nonnegative, one per user");
    std::mt19937_64 rng(seed);
    SearchResult best;
    for (long long s = 0; s < samples; ++s)
    {
        std::vector<CVec> v = random_beams(ch, rng);
        const RVec sinr = sinr_miso(ch, v);
        const double value = min_ratio(sinr, target);
        if (value > best.value)
        {
            RVec p(ch.users());
            for (int k = 0; k < ch.users(); ++k)
                p(k) = v[k].squaredNorm();
            keep_if_better(best, value, Allocation{p, {}, std::move(v)}, sinr);
        }
    }
    best.found = best.value >= 1.0;
    return best;
}

SearchResult random_wsr_simo(const SimoChannel &ch, long long samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    SearchResult best;
    for (long long s = 0; s < samples; ++s)
    {
        RVec p = uniform_powers(ch.pmax(), rng);
        MmseSinr m = sinr_simo_mmse(ch, p);
        const double wsr = ch.weights().dot(rate_of(m.sinr));
        keep_if_better(best, wsr, Allocation{std::move(p), std::move(m.receivers), {}}, m.sinr);
    }
    best.found = samples > 0;
    return best;
}

SearchResult random_wsr_miso(const MisoChannel &ch, long long samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    SearchResult best;
    for (long long s = 0; s < samples; ++s)
    {
        std::vector<CVec> v = random_beams(ch, rng);
        const RVec sinr = sinr_miso(ch, v);
        const double wsr = ch.weights().dot(rate_of(sinr));
        if (wsr > best.value)
        {
            RVec p(ch.users());
            for (int k = 0; k < ch.users(); ++k)
                p(k) = v[k].squaredNorm();
            keep_if_better(best, wsr, Allocation{p, {}, std::move(v)}, sinr);
        }
    }
    best.found = samples > 0;
    return best;
}

RVec finite_diff(const std::function<double(const RVec &)> &f, const RVec &x, double h)
{
    RVec g(x.size());
    RVec y = x;
    for (Eigen::Index i = 0; i < x.size(); ++i)
    {
        y(i) = x(i) + h;
        const double up = f(y);
        y(i) = x(i) - h;
        const double down = f(y);
        y(i) = x(i);
        g(i) = (up - down) / (2.0 * h);
    }
    return g;
}

} // namespace polywsr::oracles
