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

#ifndef POLYWSR_TESTS_SUPPORT_HPP
#define POLYWSR_TESTS_SUPPORT_HPP

#include "polywsr/channel.hpp"
#include "polywsr/wsr.hpp"

#include <limits>
#include <random>

namespace testsupport
{

using namespace polywsr;

inline UserParams uniform_params(int K, double noise, double pmax)
{
    return {RVec::Constant(K, noise), RVec::Constant(K, pmax), RVec::Ones(K)};
}

inline CVec cvec(std::initializer_list<cdouble> xs)
{
    CVec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (cdouble x : xs)
        v(i++) = x;
    return v;
}

inline CVec random_cvec(int n, std::mt19937_64 &rng)
{
    std::normal_distribution<double> g(0.0, std::sqrt(0.5));
    CVec v(n);
    for (int i = 0; i < n; ++i)
        v(i) = {g(rng), g(rng)};
    return v;
}

// Two users whose cross links are zero.
inline std::vector<std::vector<CVec>> orthogonal_vectors(int antennas)
{
    CVec e = CVec::Zero(antennas);
    e(0) = 1.0;
    CVec z = CVec::Zero(antennas);
    return {{e, z}, {z, e}};
}

inline double max_rel_diff(const RVec &a, const RVec &b)
{
    return ((a - b).cwiseAbs().array() / b.cwiseAbs().array().max(1e-300)).maxCoeff();
}

// Runs the solver on a SISO channel and checks, after every iteration, that
// the new polyblock is nested in the previous one, that the bounds move
// monotonically and that sampled achievable rates stay covered.
struct StructuralReport
{
    int iterations = 0;
    int nesting_failures = 0;
    int bound_failures = 0;
    int containment_failures = 0;
    bool ok() const { return iterations > 0 && nesting_failures + bound_failures + containment_failures == 0; }
};

inline bool covered(const RVec &r, const std::vector<Vertex> &vs)
{
    for (const auto &v : vs)
        if ((r.array() <= v.z.array() + 1e-12).all())
            return true;
    return false;
}

inline StructuralReport structural_run(const SisoChannel &ch, const WsrOptions &opt, std::uint64_t seed,
                                       int samples = 100)
{
    const int K = ch.users();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<RVec> achievable;
    for (int s = 0; s < samples; ++s)
    {
        const RVec p = RVec::NullaryExpr(K, [&](Eigen::Index k) { return ch.pmax()(k) * u(rng); });
        achievable.push_back(rate_of(sinr_siso(ch, p)));
    }

    StructuralReport rep;
    std::vector<Vertex> previous{Vertex{initial_vertex(ch), 0.0}};
    double last_upper = std::numeric_limits<double>::infinity();
    double last_lower = -std::numeric_limits<double>::infinity();
    solve_wsr(ch, opt, [&](const IterationEvent &ev) {
        ++rep.iterations;
        const std::vector<Vertex> now = ev.vertices.vertices();
        for (const auto &v : now)
            if (!covered(v.z, previous))
                ++rep.nesting_failures;
        const double upper = ev.selected.value;
        const double lower = ch.weights().dot(ev.hit.point);
        if (upper > last_upper + 1e-12)
            ++rep.bound_failures;
        last_upper = upper;
        last_lower = std::max(last_lower, lower);
        if (upper < last_lower - 1e-9)
            ++rep.bound_failures;
        for (const auto &r : achievable)
            if (!covered(r, now))
                ++rep.containment_failures;
        previous = now;
    });
    return rep;
}

} // namespace testsupport

#endif
