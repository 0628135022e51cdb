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

#ifndef POLYWSR_BOUNDARY_HPP
#define POLYWSR_BOUNDARY_HPP

#include "polywsr/channel.hpp"
#include "polywsr/feasibility.hpp"
#include "polywsr/polyblock.hpp"

#include <optional>

namespace polywsr
{

// Direction on the rate simplex: alpha >= 0, sum alpha = 1.
class RateProfile
{
public:
    explicit RateProfile(RVec alpha);

    // alpha = (vertex - origin) / sum(vertex - origin)
    static RateProfile through(const RVec &vertex, const RVec &origin);

    const RVec &alpha() const { return alpha_; }
    Eigen::Index size() const { return alpha_.size(); }

private:
    RVec alpha_;
};

// origin + alpha (rsum - sum origin)
RVec rates_on_ray(const RateProfile &profile, double rsum, const RVec &origin);

// Per-user SINR targets 2^{r_k} - 1 for the rate tuple on the ray at rsum.
// Throws invalid_argument when some rate would be negative.
RVec target_from_profile(const RateProfile &profile, double rsum, const RVec &origin);

// Dispatches to the SISO / SIMO / MISO feasibility test.
FeasibilityOutcome check_feasible(const Channel &ch, const RVec &target);

inline constexpr double kDefaultBisectionTol = 1e-4;

struct RayIntersection
{
    double rsum = 0.0;       // largest sum-rate proven achievable
    double rsum_outer = 0.0; // smallest sum-rate proven unachievable (or the cap)
    RVec rates;              // on the ray at rsum
    RVec outer;              // on the ray at rsum_outer
    Allocation witness;      // achieves `rates`
    int probes = 0;
};

// Recently classified rate points. The rate region is normal, so a point
// below a feasible one is feasible and a point above an infeasible one is
// infeasible; both shrink later bisection brackets without new probes.
class BoundaryMemory
{
public:
    explicit BoundaryMemory(std::size_t capacity = 64) : capacity_(capacity) {}

    void add_feasible(const RVec &r, const Allocation &witness);
    void add_infeasible(const RVec &u);

    struct Bound
    {
        double rsum;
        const Allocation *witness; // null for upper bounds
    };
    // Largest sum-rate on the ray known to be achievable, if any.
    std::optional<Bound> lower(const RateProfile &profile, const RVec &origin) const;
    // Smallest sum-rate on the ray known to be unachievable, if any.
    std::optional<double> upper(const RateProfile &profile, const RVec &origin) const;

    std::size_t size() const { return feasible_.size() + infeasible_.size(); }

private:
    std::size_t capacity_;
    std::vector<std::pair<RVec, Allocation>> feasible_;
    std::vector<RVec> infeasible_;
    std::size_t next_feasible_ = 0;
    std::size_t next_infeasible_ = 0;
};

/// Bisection on the sum-rate along the ray from `origin` with direction
/// `profile`. The bracket is [sum origin, exit of the single-user box],
/// optionally tightened to `rsum_cap`. Throws infeasible_min_rates when the
/// origin itself is not achievable.
RayIntersection intersect(const Channel &ch, const RateProfile &profile, const RVec &origin,
                          double tol_bits = kDefaultBisectionTol, std::optional<double> rsum_cap = std::nullopt,
                          BoundaryMemory *memory = nullptr);

/// Oracle for the polyblock engine: the ray runs from `origin` through the
/// queried vertex and the bisection is capped at the vertex itself.
BoundaryOracle make_boundary_oracle(const Channel &ch, RVec origin, double tol_bits = kDefaultBisectionTol);

} // namespace polywsr

#endif
