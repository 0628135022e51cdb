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

#include "polywsr/socp.hpp"

#include <cmath>
#include <limits>

namespace polywsr::socp
{

namespace
{

struct PreparedCone
{
    RMat A;   // A Z
    RVec b;   // A y0 + b
    RVec f;   // Z^T f
    double d; // f^T y0 + d
    RMat H; // f f^T - A^T A
};

double barrier(const std::vector<PreparedCone> &cones, const RVec &x)
{
    double phi = 0.0;
    for (const auto &c : cones)
    {
        const double u = c.f.dot(x) + c.d;
        if (!(u > 0))
            return std::numeric_limits<double>::infinity();
        const double q = u * u - (c.A * x + c.b).squaredNorm();
        if (!(q > 0))
            return std::numeric_limits<double>::infinity();
        phi -= std::log(q);
    }
    return phi;
}

} // namespace

double min_cone_slack(const Problem &prob, const RVec &y)
{
    double slack = std::numeric_limits<double>::infinity();
    for (const auto &c : prob.cones)
        slack = std::min(slack, c.f.dot(y) + c.d - (c.A * y + c.b).norm());
    return slack;
}

Result minimize(const Problem &prob, const RVec &y0, const Options &opt, const StopPredicate &stop)
{
    const Eigen::Index n = y0.size();
    require(prob.c.size() == n, "objective dimension mismatch");
    require(min_cone_slack(prob, y0) > 0, "starting point is not strictly inside the cones");

    // Orthonormal basis of null(F).
    RMat Z;
    if (prob.F.rows() == 0)
    {
        Z = RMat::Identity(n, n);
    }
    else
    {
        require(prob.F.cols() == n, "equality dimension mismatch");
        Eigen::JacobiSVD<RMat> svd(prob.F, Eigen::ComputeFullV);
        const double tol = 1e-12 * std::max(1.0, svd.singularValues().maxCoeff());
        Eigen::Index rank = 0;
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            rank += svd.singularValues()(i) > tol ? 1 : 0;
        Z = svd.matrixV().rightCols(n - rank);
    }

    std::vector<PreparedCone> cones;
    cones.reserve(prob.cones.size());
    for (const auto &c : prob.cones)
    {
        PreparedCone pc;
        pc.A = c.A * Z;
        pc.b = c.A * y0 + c.b;
        pc.f = Z.transpose() * c.f;
        pc.d = c.f.dot(y0) + c.d;
        pc.H = pc.f * pc.f.transpose() - pc.A.transpose() * pc.A;
        cones.push_back(std::move(pc));
    }
    const RVec cz = Z.transpose() * prob.c;
    const double c0 = prob.c.dot(y0);
    const double nu = 2.0 * static_cast<double>(cones.size());
    const Eigen::Index m = Z.cols();

    RVec x = RVec::Zero(m);
    Result res;
    double t = opt.t0;
    RVec grad(m);
    RMat hess(m, m);
    RVec w;
    RVec g(m);

    while (true)
    {
        // Centering by damped Newton.
        bool centered = false;
        for (int step = 0; step < opt.max_newton; ++step)
        {
            grad = t * cz;
            hess.setZero();
            for (const auto &c : cones)
            {
                const double u = c.f.dot(x) + c.d;
                w.noalias() = c.A * x;
                w += c.b;
                const double q = u * u - w.squaredNorm();
                g.noalias() = (2.0 * u) * c.f;
                g.noalias() -= 2.0 * (c.A.transpose() * w);
                grad -= g / q;
                hess.noalias() -= (2.0 / q) * c.H;
                hess.selfadjointView<Eigen::Lower>().rankUpdate(g, 1.0 / (q * q));
            }
            Eigen::LDLT<RMat> ldlt(hess);
            RVec dx = -ldlt.solve(grad);
            if (!dx.allFinite())
            {
                hess.diagonal().array() += 1e-12 * (1.0 + hess.diagonal().cwiseAbs().maxCoeff());
                dx = -hess.ldlt().solve(grad);
                if (!dx.allFinite())
                    break;
            }
            const double decrement = -grad.dot(dx);
            ++res.newton_steps;
            const double f0 = t * cz.dot(x) + barrier(cones, x);
            // Below the rounding floor of f the line search cannot make progress.
            if (decrement / 2.0 <= std::max(opt.newton_tol, 1e-13 * (1.0 + std::abs(f0))))
            {
                centered = true;
                break;
            }
            double alpha = 1.0;
            bool moved = false;
            for (int ls = 0; ls < 60; ++ls, alpha *= 0.5)
            {
                const RVec xn = x + alpha * dx;
                const double fn = t * cz.dot(xn) + barrier(cones, xn);
                if (std::isfinite(fn) && fn <= f0 - 0.25 * alpha * decrement)
                {
                    x = xn;
                    moved = true;
                    break;
                }
            }
            if (moved && stop)
            {
                res.y = y0 + Z * x;
                res.objective = c0 + cz.dot(x);
                res.lower_bound = -std::numeric_limits<double>::infinity();
                if (stop(res.objective, res.lower_bound, res.y))
                {
                    res.status = Status::stopped;
                    return res;
                }
            }
            if (!moved)
            {
                // Rounding floor: treat as centered.
                centered = true;
                break;
            }
        }

        res.y = y0 + Z * x;
        res.objective = c0 + cz.dot(x);
        res.lower_bound = res.objective - nu / t;
        if (!centered)
        {
            res.status = Status::failure;
            return res;
        }
        if (stop && stop(res.objective, res.lower_bound, res.y))
        {
            res.status = Status::stopped;
            return res;
        }
        if (nu / t < opt.gap_tol)
        {
            res.status = Status::optimal;
            return res;
        }
        t *= opt.t_factor;
    }
}

} // namespace polywsr::socp
