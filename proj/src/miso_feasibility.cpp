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

#include "polywsr/miso_feasibility.hpp"
#include "polywsr/channel_io.hpp"

#include <cmath>

namespace polywsr::miso
{

CMat ConeProgram::selector(int k) const
{
    CMat L = CMat::Zero(antennas[k], dimension);
    L.block(0, offsets[k], antennas[k], antennas[k]).setIdentity();
    return L;
}

ConeProgram build_cone_program(const MisoChannel &ch, const RVec &target)
{
    const int K = ch.users();
    require(target.size() == K, "target length must equal the user count");
    ConeProgram prog;
    prog.users = K;
    int offset = 0;
    for (int k = 0; k < K; ++k)
    {
        require(std::isfinite(target(k)) && target(k) >= 0, "SINR targets must be finite and nonnegative");
        prog.offsets.push_back(offset);
        prog.antennas.push_back(ch.antennas(k));
        offset += ch.antennas(k);
        prog.power_radius.push_back(std::sqrt(ch.pmax()(k)));
    }
    prog.dimension = offset + 1;

    for (int k = 0; k < K; ++k)
    {
        if (!(target(k) > 0))
            continue;
        prog.sinr_users.push_back(k);
        CMat E = CMat::Zero(K + 1, prog.dimension);
        for (int j = 0; j < K; ++j)
            E.block(j, prog.offsets[j], 1, prog.antennas[j]) = ch.h(k, j).adjoint();
        prog.E.push_back(std::move(E));
        CVec nk = CVec::Zero(K + 1);
        nk(K) = std::sqrt(ch.noise()(k));
        prog.noise_offset.push_back(std::move(nk));
        prog.cone_scale.push_back(std::sqrt(1.0 + 1.0 / target(k)));
        CVec a = CVec::Zero(prog.dimension);
        a.segment(prog.offsets[k], prog.antennas[k]) = ch.h(k, k).conjugate();
        prog.direct.push_back(std::move(a));
    }
    return prog;
}

namespace
{

// Real rows of r x for a complex row r acting on x' = Re + i Im.
void embed_row(const CVec &row, int nc, RVec &re_part, RVec &im_part)
{
    re_part = RVec::Zero(2 * nc + 1);
    im_part = RVec::Zero(2 * nc + 1);
    for (int m = 0; m < nc; ++m)
    {
        re_part(m) = row(m).real();
        re_part(nc + m) = -row(m).imag();
        im_part(m) = row(m).imag();
        im_part(nc + m) = row(m).real();
    }
}

} // namespace

socp::Problem to_phase_one(const ConeProgram &prog)
{
    const int nc = prog.dimension - 1; // trailing coordinate is fixed to zero
    const int n = 2 * nc + 1;
    socp::Problem out;
    out.c = RVec::Zero(n);
    out.c(n - 1) = 1.0;
    out.F = RMat::Zero(static_cast<Eigen::Index>(prog.sinr_users.size()), n);

    for (std::size_t c = 0; c < prog.sinr_users.size(); ++c)
    {
        const CMat &E = prog.E[c];
        socp::Cone cone;
        cone.A = RMat::Zero(2 * E.rows(), n);
        cone.b = RVec::Zero(2 * E.rows());
        for (Eigen::Index r = 0; r < E.rows(); ++r)
        {
            RVec re, im;
            embed_row(E.row(r).transpose(), nc, re, im);
            cone.A.row(r) = re.transpose();
            cone.A.row(E.rows() + r) = im.transpose();
            cone.b(r) = prog.noise_offset[c](r).real();
            cone.b(E.rows() + r) = prog.noise_offset[c](r).imag();
        }
        RVec re, im;
        embed_row(prog.direct[c], nc, re, im);
        cone.f = prog.cone_scale[c] * re;
        cone.f(n - 1) = 1.0;
        cone.d = 0.0;
        out.F.row(static_cast<Eigen::Index>(c)) = im.transpose();
        out.cones.push_back(std::move(cone));
    }

    for (int k = 0; k < prog.users; ++k)
    {
        socp::Cone cone;
        const int N = prog.antennas[k];
        cone.A = RMat::Zero(2 * N, n);
        for (int m = 0; m < N; ++m)
        {
            cone.A(m, prog.offsets[k] + m) = 1.0;
            cone.A(N + m, nc + prog.offsets[k] + m) = 1.0;
        }
        cone.b = RVec::Zero(2 * N);
        cone.f = RVec::Zero(n);
        cone.d = prog.power_radius[k];
        out.cones.push_back(std::move(cone));
    }
    return out;
}

nlohmann::json to_json(const ConeProgram &prog)
{
    using nlohmann::json;
    json doc;
    doc["users"] = prog.users;
    doc["dimension"] = prog.dimension;
    doc["offsets"] = prog.offsets;
    doc["antennas"] = prog.antennas;
    doc["power_radius"] = prog.power_radius;
    json cones = json::array();
    for (std::size_t c = 0; c < prog.sinr_users.size(); ++c)
    {
        json cone;
        cone["user"] = prog.sinr_users[c];
        json E = json::array();
        for (Eigen::Index r = 0; r < prog.E[c].rows(); ++r)
            E.push_back(vector_to_json(CVec(prog.E[c].row(r).transpose())));
        cone["E"] = E;
        cone["n"] = vector_to_json(prog.noise_offset[c]);
        cone["scale"] = prog.cone_scale[c];
        cone["direct"] = vector_to_json(prog.direct[c]);
        cones.push_back(cone);
    }
    doc["sinr_cones"] = cones;
    return doc;
}

namespace
{

std::vector<CVec> beamformers_from(const ConeProgram &prog, const RVec &y)
{
    const int nc = prog.dimension - 1;
    std::vector<CVec> v(prog.users);
    for (int k = 0; k < prog.users; ++k)
    {
        v[k].resize(prog.antennas[k]);
        for (int m = 0; m < prog.antennas[k]; ++m)
            v[k](m) = cdouble(y(prog.offsets[k] + m), y(nc + prog.offsets[k] + m));
        // Clip rounding excess over the budget.
        const double cap = prog.power_radius[k];
        const double norm = v[k].norm();
        if (norm > cap)
            v[k] *= cap / norm;
    }
    return v;
}

bool meets_target(const MisoChannel &ch, const std::vector<CVec> &v, const RVec &target)
{
    const RVec gamma = sinr_miso(ch, v);
    for (int k = 0; k < ch.users(); ++k)
        if (gamma(k) < target(k) * (1.0 - kWitnessSlack))
            return false;
    return true;
}

} // namespace

FeasibilityOutcome check_feasible(const MisoChannel &ch, const RVec &target)
{
    const int K = ch.users();
    require(target.size() == K, "target length must equal the user count");
    const std::vector<int> active = active_users(target);

    Allocation witness{RVec::Zero(K), {}, std::vector<CVec>(K)};
    for (int k = 0; k < K; ++k)
        witness.beamformers[k] = CVec::Zero(ch.antennas(k));
    if (active.empty())
        return {true, witness};

    const MisoChannel sub = ch.restrict_to(active);
    RVec sub_target(active.size());
    for (std::size_t a = 0; a < active.size(); ++a)
        sub_target(a) = target(active[a]);

    const ConeProgram prog = build_cone_program(sub, sub_target);
    const socp::Problem problem = to_phase_one(prog);
    RVec y0 = RVec::Zero(problem.c.size());
    y0(y0.size() - 1) = 1.0 + 2.0 * std::sqrt(sub.noise().maxCoeff());

    std::vector<CVec> found;
    auto stop = [&](double objective, double lower_bound, const RVec &y) {
        if (objective <= 0)
        {
            auto v = beamformers_from(prog, y);
            if (meets_target(sub, v, sub_target))
            {
                found = std::move(v);
                return true;
            }
        }
        return lower_bound > 0;
    };
    const socp::Result res = socp::minimize(problem, y0, {}, stop);

    if (found.empty())
    {
        // Boundary case: accept the final iterate if it re-validates.
        auto v = beamformers_from(prog, res.y);
        if (meets_target(sub, v, sub_target))
            found = std::move(v);
    }
    if (!found.empty())
    {
        for (std::size_t a = 0; a < active.size(); ++a)
            witness.beamformers[active[a]] = found[a];
        for (int k = 0; k < K; ++k)
            witness.power(k) = witness.beamformers[k].squaredNorm();
        return {true, witness};
    }
    if (res.status == socp::Status::failure && !(res.lower_bound > 0))
        throw Error(ErrorCode::solver_failure, "cone feasibility solve did not reach a decision");
    return {false, std::nullopt};
}

} // namespace polywsr::miso
