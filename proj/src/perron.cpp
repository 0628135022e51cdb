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

#include "polywsr/perron.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>

namespace polywsr
{

namespace
{

PerronPair dense_perron(const RMat &A)
{
    Eigen::EigenSolver<RMat> es(A, true);
    if (es.info() != Eigen::Success)
        throw Error(ErrorCode::solver_failure, "eigen decomposition failed");
    const auto &vals = es.eigenvalues();
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < vals.size(); ++i)
    {
        const double mag = std::abs(vals(i));
        const double best_mag = std::abs(vals(best));
        // Prefer the real eigenvalue among equal-modulus ones.
        if (mag > best_mag * (1 + 1e-12) ||
            (mag >= best_mag * (1 - 1e-12) && std::abs(vals(i).imag()) < std::abs(vals(best).imag())))
            best = i;
    }
    PerronPair out;
    out.radius = std::abs(vals(best));
    RVec v = es.eigenvectors().col(best).real();
    if (v.sum() < 0)
        v = -v;
    const double scale = v.cwiseAbs().maxCoeff();
    out.vector = scale > 0 ? RVec(v / scale) : RVec(RVec::Zero(A.rows()));
    return out;
}

} // namespace

PerronPair perron_pair(const RMat &A, double rel_tol, int max_iter)
{
    require(A.rows() == A.cols(), "perron_pair needs a square matrix");
    const Eigen::Index n = A.rows();
    if (n == 0)
        return {0.0, RVec(), true};
    if (A.cwiseAbs().maxCoeff() == 0.0)
        return {0.0, RVec::Ones(n), true};

    // The unit shift makes the iteration matrix primitive on each irreducible
    // block so periodic patterns such as [[0,1],[1,0]] still converge.
    RVec x = RVec::Ones(n);
    for (int it = 0; it < max_iter; ++it)
    {
        const RVec y = A * x;
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
        {
            const double ratio = y(i) / x(i);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        if (hi - lo <= rel_tol * hi)
        {
            PerronPair out;
            out.radius = 0.5 * (lo + hi);
            out.vector = x / x.maxCoeff();
            out.from_power_iteration = true;
            return out;
        }
        RVec next = y + x;
        const double scale = next.maxCoeff();
        if (!(scale > 0) || !std::isfinite(scale))
            break;
        next /= scale;
        if (next.minCoeff() < 1e-300)
            break; // a zero component would spoil the bounds
        x = std::move(next);
    }
    return dense_perron(A);
}

double spectral_radius(const RMat &A)
{
    return perron_pair(A).radius;
}

} // namespace polywsr
