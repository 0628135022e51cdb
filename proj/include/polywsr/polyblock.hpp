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

#ifndef POLYWSR_POLYBLOCK_HPP
#define POLYWSR_POLYBLOCK_HPP

#include "polywsr/common.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <set>

namespace polywsr
{

/// Corner of a box [origin, z] in the outer polyblock, with its cached
/// objective value U(z) = sum_k mu_k z_k.
struct Vertex
{
    RVec z;
    double value = 0.0;
};

/// Vertex storage ordered by value (largest first), ties broken by the
/// lexicographically largest z so selection is deterministic.
///
/// Vertices inside the epsilon strip (some z_k < origin_k + epsilon) are kept
/// but skipped by select(). With pruning enabled, a vertex that is
/// componentwise dominated by another stored vertex is dropped: its box is
/// covered and it can never be the maximizer of an increasing objective.
class VertexSet
{
public:
    VertexSet(RVec weights, RVec origin, double epsilon, bool prune_dominated = true);

    /// Returns true when z was stored (not a duplicate, not dominated).
    bool insert(const RVec &z);
    /// Cheaper insert for a child of a vertex that was just removed.
    bool insert_child(const RVec &z);
    bool erase(const RVec &z);
    bool contains(const RVec &z) const;

    std::optional<Vertex> select() const;

    std::size_t size() const { return set_.size() + strip_.size(); }
    bool empty() const { return set_.empty() && strip_.empty(); }
    /// Vertices inside the epsilon strip; never selected.
    std::size_t strip_size() const { return strip_.size(); }
    std::vector<Vertex> vertices() const;

    const RVec &weights() const { return weights_; }
    const RVec &origin() const { return origin_; }
    double epsilon() const { return epsilon_; }

    Vertex make_vertex(const RVec &z) const;

private:
    struct Order
    {
        bool operator()(const Vertex &a, const Vertex &b) const;
    };

    bool in_strip(const RVec &z) const;
    bool dominated(const Vertex &v, const std::set<Vertex, Order> &in) const;

    RVec weights_;
    RVec origin_;
    double epsilon_;
    bool prune_;
    std::set<Vertex, Order> set_;   // selectable
    std::set<Vertex, Order> strip_; // parked inside the strip
};

/// argmax of U over the epsilon-filtered set; throws empty_epsilon_set.
Vertex select_vertex(const VertexSet &vs);

/// The i-th child is `vertex` with coordinate i replaced by r_i.
std::vector<RVec> generate_children(const RVec &vertex, const RVec &r);

/// Removes `vertex` and inserts the children.
void update_vertex_set(VertexSet &vs, const RVec &vertex, const std::vector<RVec> &children);

struct PolyblockConfig
{
    double epsilon = 0.01;
    double eta = 0.1;
    int max_iterations = 50000;
    RVec origin; // empty means the zero vector
    bool prune_dominated = true;
};

enum class Termination
{
    converged,
    iteration_cap,
    empty_vertex_set
};

const char *to_string(Termination t);

struct TraceRecord
{
    int iteration = 0;
    double upper_bound = 0.0;
    double lower_bound = 0.0;
    std::size_t num_vertices = 0;
};

/// What a boundary oracle returns for the ray from the origin through a
/// vertex. `point` is achievable (with `witness`); every rate tuple strictly
/// above `outer` in all coordinates is not. `outer` is used to cut the
/// polyblock, so an inexact oracle never removes achievable rates.
struct Intersection
{
    RVec point;
    RVec outer;
    Allocation witness;
};

using BoundaryOracle = std::function<Intersection(const RVec &vertex)>;

struct SolveResult
{
    RVec best_point;
    double best_value = 0.0;
    double upper_bound = 0.0;
    Allocation witness;
    std::vector<TraceRecord> trace;
    Termination termination = Termination::converged;
    int iterations = 0;
    // strip_value(k): largest U(z) over the final vertices with
    // z_k < origin_k + epsilon, -inf when there is none.
    RVec strip_value;
    int face_iterations = 0; // iterations spent on sub-channels, see solve_wsr
};

struct IterationEvent
{
    int iteration;
    const Vertex &selected;
    const Intersection &hit;
    const VertexSet &vertices; // after the update
};

using IterationObserver = std::function<void(const IterationEvent &)>;

/// Outer polyblock approximation for max sum_k mu_k r_k over a normal set.
/// Stops once U(z~) - U(r~) <= eta, at the iteration cap, or when no vertex
/// is left outside the epsilon strip.
SolveResult solve(const BoundaryOracle &oracle, const PolyblockConfig &cfg, const RVec &z1,
                  const RVec &weights, const IterationObserver &observer = {});

/// iteration,upper_bound,lower_bound,num_vertices
void write_trace_csv(std::ostream &os, const std::vector<TraceRecord> &trace);

} // namespace polywsr

#endif
