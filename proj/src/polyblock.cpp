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

#include "polywsr/polyblock.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace polywsr
{

namespace
{

// a <= b componentwise and a != b
bool dominated_by(const RVec &a, const RVec &b)
{
    bool strict = false;
    for (Eigen::Index k = 0; k < a.size(); ++k)
    {
        if (a(k) > b(k))
            return false;
        strict = strict || a(k) < b(k);
    }
    return strict;
}

} // namespace

bool VertexSet::Order::operator()(const Vertex &a, const Vertex &b) const
{
    if (a.value != b.value)
        return a.value > b.value;
    for (Eigen::Index k = 0; k < a.z.size(); ++k)
        if (a.z(k) != b.z(k))
            return a.z(k) > b.z(k);
    return false;
}

VertexSet::VertexSet(RVec weights, RVec origin, double epsilon, bool prune_dominated)
    : weights_(std::move(weights)), origin_(std::move(origin)), epsilon_(epsilon), prune_(prune_dominated)
{
    if (origin_.size() == 0)
        origin_ = RVec::Zero(weights_.size());
    require(origin_.size() == weights_.size(), "origin and weights differ in length");
    require(epsilon_ > 0, "epsilon must be positive");
}

Vertex VertexSet::make_vertex(const RVec &z) const
{
    require(z.size() == weights_.size(), "vertex dimension mismatch");
    return Vertex{z, weights_.dot(z)};
}

bool VertexSet::in_strip(const RVec &z) const
{
    for (Eigen::Index k = 0; k < z.size(); ++k)
        if (!(z(k) >= origin_(k) + epsilon_))
            return true;
    return false;
}

bool VertexSet::dominated(const Vertex &v, const std::set<Vertex, Order> &in) const
{
    // Anything dominating v has value >= v.value, so it sits before v.
    for (auto it = in.begin(); it != in.end() && it->value >= v.value; ++it)
        if (dominated_by(v.z, it->z))
            return true;
    return false;
}

bool VertexSet::insert(const RVec &z)
{
    Vertex v = make_vertex(z);
    if (set_.count(v) || strip_.count(v))
        return false;
    if (prune_)
    {
        if (dominated(v, set_) || dominated(v, strip_))
            return false;
        for (auto *s : {&set_, &strip_})
            for (auto it = s->lower_bound(v); it != s->end();)
            {
                if (dominated_by(it->z, v.z))
                    it = s->erase(it);
                else
                    ++it;
            }
    }
    (in_strip(v.z) ? strip_ : set_).insert(std::move(v));
    return true;
}

bool VertexSet::insert_child(const RVec &z)
{
    Vertex v = make_vertex(z);
    if (in_strip(v.z))
        return strip_.insert(std::move(v)).second;
    // A child lies below its parent, so it cannot dominate a vertex of a
    // set that had no dominated members; only the upward check is needed.
    if (set_.count(v) || (prune_ && dominated(v, set_)))
        return false;
    set_.insert(std::move(v));
    return true;
}

bool VertexSet::erase(const RVec &z)
{
    const Vertex v = make_vertex(z);
    return set_.erase(v) + strip_.erase(v) > 0;
}

bool VertexSet::contains(const RVec &z) const
{
    const Vertex v = make_vertex(z);
    return set_.count(v) + strip_.count(v) > 0;
}

std::optional<Vertex> VertexSet::select() const
{
    if (set_.empty())
        return std::nullopt;
    return *set_.begin();
}

std::vector<Vertex> VertexSet::vertices() const
{
    std::vector<Vertex> out(set_.begin(), set_.end());
    out.insert(out.end(), strip_.begin(), strip_.end());
    return out;
}

Vertex select_vertex(const VertexSet &vs)
{
    auto v = vs.select();
    if (!v)
        throw Error(ErrorCode::empty_epsilon_set, "no vertex lies outside the epsilon strip");
    return *v;
}

std::vector<RVec> generate_children(const RVec &vertex, const RVec &r)
{
    require(vertex.size() == r.size(), "vertex and intersection differ in length");
    for (Eigen::Index k = 0; k < r.size(); ++k)
        require(r(k) <= vertex(k), "intersection point is not dominated by the vertex");
    std::vector<RVec> children;
    children.reserve(r.size());
    for (Eigen::Index i = 0; i < r.size(); ++i)
    {
        RVec child = vertex;
        child(i) = r(i);
        children.push_back(std::move(child));
    }
    return children;
}

void update_vertex_set(VertexSet &vs, const RVec &vertex, const std::vector<RVec> &children)
{
    vs.erase(vertex);
    for (const RVec &c : children)
        vs.insert_child(c);
}

const char *to_string(Termination t)
{
    switch (t)
    {
    case Termination::converged: return "converged";
    case Termination::iteration_cap: return "iteration_cap";
    case Termination::empty_vertex_set: return "empty_vertex_set";
    }
    return "unknown";
}

SolveResult solve(const BoundaryOracle &oracle, const PolyblockConfig &cfg, const RVec &z1,
                  const RVec &weights, const IterationObserver &observer)
{
    const Eigen::Index K = z1.size();
    require(weights.size() == K, "weights and initial vertex differ in length");
    const RVec origin = cfg.origin.size() == 0 ? RVec(RVec::Zero(K)) : cfg.origin;
    require(origin.size() == K, "origin and initial vertex differ in length");
    require(cfg.eta > 0, "eta must be positive");
    require(cfg.max_iterations > 0, "iteration cap must be positive");
    require(cfg.epsilon > 0 && cfg.epsilon < (z1 - origin).minCoeff(),
            "epsilon must be positive and below the smallest initial box side");

    VertexSet vs(weights, origin, cfg.epsilon, cfg.prune_dominated);
    vs.insert(z1);

    SolveResult result;
    result.best_value = -std::numeric_limits<double>::infinity();
    result.upper_bound = std::numeric_limits<double>::infinity();
    result.termination = Termination::iteration_cap;

    for (int n = 1; n <= cfg.max_iterations; ++n)
    {
        const auto selected = vs.select();
        if (!selected)
        {
            result.termination = Termination::empty_vertex_set;
            break;
        }
        const Intersection hit = oracle(selected->z);
        const double hit_value = weights.dot(hit.point);
        if (hit_value > result.best_value)
        {
            result.best_value = hit_value;
            result.best_point = hit.point;
            result.witness = hit.witness;
        }
        result.upper_bound = selected->value;
        result.iterations = n;

        const bool done = selected->value - result.best_value <= cfg.eta;
        if (!done)
            update_vertex_set(vs, selected->z, generate_children(selected->z, hit.outer));

        result.trace.push_back({n, selected->value, result.best_value, vs.size()});
        if (observer)
            observer(IterationEvent{n, *selected, hit, vs});
        if (done)
        {
            result.termination = Termination::converged;
            break;
        }
    }

    result.strip_value = RVec::Constant(K, -std::numeric_limits<double>::infinity());
    for (const Vertex &v : vs.vertices())
        for (Eigen::Index k = 0; k < K; ++k)
            if (v.z(k) < origin(k) + cfg.epsilon)
                result.strip_value(k) = std::max(result.strip_value(k), v.value);
    return result;
}

void write_trace_csv(std::ostream &os, const std::vector<TraceRecord> &trace)
{
    const auto old_precision = os.precision(17);
    os << "iteration,upper_bound,lower_bound,num_vertices\n";
    for (const auto &t : trace)
        os << t.iteration << ',' << t.upper_bound << ',' << t.lower_bound << ',' << t.num_vertices << '\n';
    os.precision(old_precision);
}

} // namespace polywsr
