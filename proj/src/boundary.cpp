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

#include "polywsr/boundary.hpp"
#include "polywsr/miso_feasibility.hpp"
#include "polywsr/simo_feasibility.hpp"
#include "polywsr/siso_feasibility.hpp"

#include <cmath>
#include <limits>
#include <memory>

namespace polywsr
{

RateProfile::RateProfile(RVec alpha) : alpha_(std::move(alpha))
{
    require(alpha_.size() > 0, "rate profile must not be empty");
    require(alpha_.allFinite() && alpha_.minCoeff() >= 0, "rate profile entries must be nonnegative");
    require(std::abs(alpha_.sum() - 1.0) <= 1e-12, "rate profile must sum to one");
}

RateProfile RateProfile::through(const RVec &vertex, const RVec &origin)
{
    require(vertex.size() == origin.size(), "vertex and origin differ in length");
    const RVec d = vertex - origin;
    require(d.minCoeff() >= 0 && d.sum() > 0, "vertex must dominate the origin");
    return RateProfile(d / d.sum());
}

RVec rates_on_ray(const RateProfile &profile, double rsum, const RVec &origin)
{
    require(origin.size() == profile.size(), "origin and profile differ in length");
    return origin + profile.alpha() * (rsum - origin.sum());
}

RVec target_from_profile(const RateProfile &profile, double rsum, const RVec &origin)
{
    require(std::isfinite(rsum) && rsum >= 0, "sum-rate must be nonnegative");
    const RVec r = rates_on_ray(profile, rsum, origin);
    RVec gamma(r.size());
    for (Eigen::Index k = 0; k < r.size(); ++k)
    {
        require(r(k) >= 0, "sum-rate lies below the minimum-rate origin");
        gamma(k) = std::exp2(r(k)) - 1.0;
    }
    return gamma;
}

namespace
{

// Sufficient test: keep the receive or transmit directions of a known
// allocation and solve only the scalar power control. Success yields a
// verified witness; failure says nothing.
std::optional<Allocation> try_directions(const Channel &ch, const RVec &target, const Allocation &hint)
{
    const int K = users_of(ch);
    const RVec active = (target.array() > 0).cast<double>();
    RMat gain = RMat::Zero(K, K);
    std::vector<CVec> dirs(K);
    if (const auto *simo = std::get_if<SimoChannel>(&ch))
    {
        if (static_cast<int>(hint.receivers.size()) != K)
            return std::nullopt;
        for (int k = 0; k < K; ++k)
        {
            const double n2 = hint.receivers[k].squaredNorm();
            if (active(k) > 0 && !(n2 > 0))
                return std::nullopt;
            dirs[k] = n2 > 0 ? CVec(hint.receivers[k] / std::sqrt(n2)) : CVec(simo->h(k, k));
            for (int j = 0; j < K; ++j)
                gain(k, j) = std::norm(dirs[k].dot(simo->h(k, j)));
        }
    }
    else if (const auto *miso = std::get_if<MisoChannel>(&ch))
    {
        if (static_cast<int>(hint.beamformers.size()) != K)
            return std::nullopt;
        for (int k = 0; k < K; ++k)
        {
            const double n2 = hint.beamformers[k].squaredNorm();
            if (active(k) > 0 && !(n2 > 0))
                return std::nullopt;
            dirs[k] = n2 > 0 ? CVec(hint.beamformers[k] / std::sqrt(n2)) : CVec(miso->h(k, k) / miso->h(k, k).norm());
        }
        for (int k = 0; k < K; ++k)
            for (int j = 0; j < K; ++j)
                gain(k, j) = std::norm(miso->h(k, j).dot(dirs[j]));
    }
    else
    {
        return std::nullopt;
    }
    for (int k = 0; k < K; ++k)
        if (active(k) > 0 && !(gain(k, k) > 0))
            return std::nullopt;

    const FeasibilityOutcome f = siso::check_feasible(SisoChannel(gain, params_of(ch)), target);
    if (!f.feasible)
        return std::nullopt;
    Allocation a;
    a.power = f.witness->power.cwiseMin(params_of(ch).pmax);
    RVec sinr;
    if (const auto *simo = std::get_if<SimoChannel>(&ch))
    {
        a.receivers = dirs;
        sinr = sinr_simo(*simo, a.power, a.receivers);
    }
    else
    {
        a.beamformers.resize(K);
        for (int k = 0; k < K; ++k)
            a.beamformers[k] = std::sqrt(a.power(k)) * dirs[k];
        sinr = sinr_miso(std::get<MisoChannel>(ch), a.beamformers);
    }
    for (int k = 0; k < K; ++k)
        if (sinr(k) < target(k) * (1.0 - kWitnessSlack))
            return std::nullopt;
    return a;
}

} // namespace

FeasibilityOutcome check_feasible(const Channel &ch, const RVec &target)
{
    return std::visit(
        [&](const auto &c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, SisoChannel>)
                return siso::check_feasible(c, target);
            else if constexpr (std::is_same_v<T, SimoChannel>)
                return simo::check_feasible(c, target);
            else
                return miso::check_feasible(c, target);
        },
        ch);
}

void BoundaryMemory::add_feasible(const RVec &r, const Allocation &witness)
{
    if (feasible_.size() < capacity_)
        feasible_.emplace_back(r, witness);
    else
        feasible_[next_feasible_++ % capacity_] = {r, witness};
}

void BoundaryMemory::add_infeasible(const RVec &u)
{
    if (infeasible_.size() < capacity_)
        infeasible_.push_back(u);
    else
        infeasible_[next_infeasible_++ % capacity_] = u;
}

std::optional<BoundaryMemory::Bound> BoundaryMemory::lower(const RateProfile &profile, const RVec &origin) const
{
    const RVec &a = profile.alpha();
    std::optional<Bound> best;
    for (const auto &[r, w] : feasible_)
    {
        double step = std::numeric_limits<double>::infinity();
        bool below = true;
        for (Eigen::Index j = 0; j < a.size() && below; ++j)
        {
            if (a(j) > 0)
                step = std::min(step, (r(j) - origin(j)) / a(j));
            else
                below = r(j) >= origin(j);
        }
        if (!below || !(step >= 0) || !std::isfinite(step))
            continue;
        const double rsum = origin.sum() + step;
        if (!best || rsum > best->rsum)
            best = Bound{rsum, &w};
    }
    return best;
}

std::optional<double> BoundaryMemory::upper(const RateProfile &profile, const RVec &origin) const
{
    const RVec &a = profile.alpha();
    std::optional<double> best;
    for (const RVec &u : infeasible_)
    {
        double step = 0.0;
        bool reachable = true;
        for (Eigen::Index j = 0; j < a.size() && reachable; ++j)
        {
            if (a(j) > 0)
                step = std::max(step, (u(j) - origin(j)) / a(j));
            else
                reachable = origin(j) >= u(j);
        }
        if (!reachable)
            continue;
        const double rsum = origin.sum() + step;
        if (!best || rsum < *best)
            best = rsum;
    }
    return best;
}

RayIntersection intersect(const Channel &ch, const RateProfile &profile, const RVec &origin, double tol_bits,
                          std::optional<double> rsum_cap, BoundaryMemory *memory)
{
    const int K = users_of(ch);
    require(profile.size() == K && origin.size() == K, "profile, origin and channel differ in size");
    require(tol_bits > 0, "bisection tolerance must be positive");

    const RVec z1 = initial_vertex(ch);
    const double base = origin.sum();
    double hi = std::numeric_limits<double>::infinity();
    for (int k = 0; k < K; ++k)
        if (profile.alpha()(k) > 0)
            hi = std::min(hi, (z1(k) - origin(k)) / profile.alpha()(k) + base);
    if (rsum_cap)
        hi = std::min(hi, *rsum_cap);
    require(hi >= base, "bisection bracket is empty");

    RayIntersection out;
    auto probe = [&](double rsum) {
        ++out.probes;
        FeasibilityOutcome f = check_feasible(ch, target_from_profile(profile, rsum, origin));
        if (memory)
        {
            if (f.feasible)
                memory->add_feasible(rates_on_ray(profile, rsum, origin), *f.witness);
            else
                memory->add_infeasible(rates_on_ray(profile, rsum, origin));
        }
        return f;
    };

    double lo = base;
    Allocation witness;
    const auto known_lo = memory ? memory->lower(profile, origin) : std::nullopt;
    if (known_lo)
    {
        lo = std::min(known_lo->rsum, hi);
        witness = *known_lo->witness;
    }
    else
    {
        FeasibilityOutcome at_base = probe(base);
        if (!at_base.feasible)
            throw Error(ErrorCode::infeasible_min_rates, "the minimum-rate point is not achievable");
        witness = std::move(*at_base.witness);
    }

    const auto known_hi = memory ? memory->upper(profile, origin) : std::nullopt;
    if (known_hi && *known_hi < hi)
    {
        hi = std::max(*known_hi, lo);
    }
    else if (lo < hi)
    {
        FeasibilityOutcome at_top = probe(hi);
        if (at_top.feasible)
        {
            lo = hi;
            witness = std::move(*at_top.witness);
        }
    }
    if (topology_of(ch) == Topology::siso)
    {
        while (hi - lo > tol_bits)
        {
            const double mid = 0.5 * (lo + hi);
            FeasibilityOutcome f = probe(mid);
            if (f.feasible)
            {
                lo = mid;
                witness = std::move(*f.witness);
            }
            else
            {
                hi = mid;
            }
        }
    }
    else
    {
        // Multi-antenna checks are costly, and most of the bracket can be
        // cleared by re-running power control with the directions of the
        // current witness. Exact probes then start just above that point.
        double step = 0.5 * tol_bits;
        while (hi - lo > tol_bits)
        {
            const double before = lo;
            double quick_hi = hi;
            while (quick_hi - lo > tol_bits)
            {
                const double mid = 0.5 * (lo + quick_hi);
                if (auto a = try_directions(ch, target_from_profile(profile, mid, origin), witness))
                {
                    lo = mid;
                    witness = std::move(*a);
                }
                else
                {
                    quick_hi = mid;
                }
            }
            if (hi - lo <= tol_bits)
                break;
            // The fixed-direction boundary is usually within a tolerance of
            // the true one; if the quick pass stalls, widen the step.
            step = lo > before ? tol_bits : 2.0 * step;
            const double mid = lo + std::min(step, 0.5 * (hi - lo));
            FeasibilityOutcome f = probe(mid);
            if (f.feasible)
            {
                lo = mid;
                witness = std::move(*f.witness);
            }
            else
            {
                hi = mid;
            }
        }
    }
    out.rsum = lo;
    out.rsum_outer = hi;
    out.rates = rates_on_ray(profile, lo, origin);
    out.outer = rates_on_ray(profile, hi, origin);
    out.witness = std::move(witness);
    return out;
}

BoundaryOracle make_boundary_oracle(const Channel &ch, RVec origin, double tol_bits)
{
    auto memory = std::make_shared<BoundaryMemory>();
    return [ch, origin = std::move(origin), tol_bits, memory](const RVec &vertex) {
        const RateProfile profile = RateProfile::through(vertex, origin);
        const RayIntersection hit = intersect(ch, profile, origin, tol_bits, vertex.sum(), memory.get());
        // Rounding on the ray may overshoot the vertex by an ulp.
        return Intersection{hit.rates.cwiseMin(vertex), hit.outer.cwiseMin(vertex), hit.witness};
    };
}

} // namespace polywsr
