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

#include "polywsr/pricing.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <ostream>

namespace polywsr::pricing
{

namespace
{

constexpr double kLn2 = std::numbers::ln2;

CMat interference_plus_noise(const SimoChannel &ch, const RVec &p, int k)
{
    const int M = ch.antennas(k);
    CMat C = CMat::Identity(M, M) * ch.noise()(k);
    for (int j = 0; j < ch.users(); ++j)
        if (j != k)
            C.noalias() += p(j) * ch.h(k, j) * ch.h(k, j).adjoint();
    return C;
}

double mmse_gain(const SimoChannel &ch, const RVec &p, int k)
{
    return ch.h(k, k).dot(interference_plus_noise(ch, p, k).llt().solve(ch.h(k, k))).real();
}

struct Tracker
{
    const RVec &weights;
    const RunOptions &opt;
    RunResult &res;
    int since_improvement = 0;

    // Returns true when the run should stop.
    bool record(int sweep, const Allocation &a, const RVec &rates, double change)
    {
        const double wsr = weights.dot(rates);
        res.trajectory.push_back({sweep, wsr, change});
        res.sweeps = sweep;
        res.allocation = a;
        res.rates = rates;
        res.wsr = wsr;
        if (sweep == 1 || wsr > res.best_wsr + 1e-12)
        {
            res.best_wsr = wsr;
            res.best_allocation = a;
            since_improvement = 0;
        }
        else
        {
            ++since_improvement;
        }
        if (change < opt.tol)
        {
            res.converged = true;
            return true;
        }
        return since_improvement >= opt.stall_window;
    }
};

} // namespace

RMat simo_price(const SimoChannel &ch, const RVec &p)
{
    const int K = ch.users();
    require(p.size() == K, "power vector length must equal the user count");
    RMat price = RMat::Zero(K, K);
    for (int j = 0; j < K; ++j)
    {
        const CVec u = interference_plus_noise(ch, p, j).llt().solve(ch.h(j, j));
        const double q = ch.h(j, j).dot(u).real();
        for (int k = 0; k < K; ++k)
            if (k != j)
                price(j, k) = p(j) * std::norm(u.dot(ch.h(j, k))) / (kLn2 * (1.0 + p(j) * q));
    }
    return price;
}

double simo_power_update(const SimoChannel &ch, const RVec &p, const RMat &price, int k)
{
    double charged = 0.0;
    for (int j = 0; j < ch.users(); ++j)
        if (j != k)
            charged += ch.weights()(j) * price(j, k);
    const double cap = ch.pmax()(k);
    if (!(charged > 0))
        return cap;
    const double level = ch.weights()(k) / (kLn2 * charged) - 1.0 / mmse_gain(ch, p, k);
    return std::clamp(level, 0.0, cap);
}

double simo_surrogate(const SimoChannel &ch, const RVec &p, const RMat &price, int k, double pk)
{
    double charged = 0.0;
    for (int j = 0; j < ch.users(); ++j)
        if (j != k)
            charged += ch.weights()(j) * price(j, k);
    return ch.weights()(k) * std::log2(1.0 + pk * mmse_gain(ch, p, k)) - pk * charged;
}

RunResult run_simo_pricing(const SimoChannel &ch, const RunOptions &opt)
{
    RunResult res;
    Tracker tracker{ch.weights(), opt, res};
    RVec p = ch.pmax();
    for (int sweep = 1; sweep <= opt.max_sweeps; ++sweep)
    {
        const RMat price = simo_price(ch, p);
        double change = 0.0;
        for (int k = 0; k < ch.users(); ++k)
        {
            const double next = simo_power_update(ch, p, price, k);
            change = std::max(change, std::abs(next - p(k)));
            p(k) = next;
        }
        const MmseSinr s = sinr_simo_mmse(ch, p);
        if (tracker.record(sweep, Allocation{p, s.receivers, {}}, rate_of(s.sinr), change))
            break;
    }
    return res;
}

MisoPrices miso_price(const MisoChannel &ch, const std::vector<CVec> &v)
{
    const int K = ch.users();
    require(static_cast<int>(v.size()) == K, "beamformer count must equal the user count");
    MisoPrices out{RVec(K), RVec(K)};
    for (int k = 0; k < K; ++k)
    {
        double gamma = 0.0;
        for (int j = 0; j < K; ++j)
            if (j != k)
                gamma += std::norm(ch.h(k, j).dot(v[j]));
        const double signal = std::norm(ch.h(k, k).dot(v[k]));
        const double floor = gamma + ch.noise()(k);
        out.interference(k) = gamma;
        out.price(k) = signal / (kLn2 * (signal + floor) * floor);
    }
    return out;
}

namespace
{

CMat price_matrix(const MisoChannel &ch, const RVec &price, int k)
{
    const int N = ch.antennas(k);
    CMat B = CMat::Zero(N, N);
    for (int j = 0; j < ch.users(); ++j)
        if (j != k)
            B.noalias() += ch.weights()(j) * price(j) * ch.h(j, k) * ch.h(j, k).adjoint();
    return B;
}

double interference_at(const MisoChannel &ch, const std::vector<CVec> &v, int k)
{
    double gamma = 0.0;
    for (int j = 0; j < ch.users(); ++j)
        if (j != k)
            gamma += std::norm(ch.h(k, j).dot(v[j]));
    return gamma;
}

} // namespace

double miso_surrogate(const MisoChannel &ch, const std::vector<CVec> &v, const RVec &price, int k,
                      const CVec &vk)
{
    const double floor = interference_at(ch, v, k) + ch.noise()(k);
    const CMat B = price_matrix(ch, price, k);
    return ch.weights()(k) * std::log2(1.0 + std::norm(ch.h(k, k).dot(vk)) / floor) - vk.dot(B * vk).real();
}

CVec miso_beam_update(const MisoChannel &ch, const std::vector<CVec> &v, const RVec &price, int k)
{
    const int N = ch.antennas(k);
    const double mu = ch.weights()(k);
    const double floor = interference_at(ch, v, k) + ch.noise()(k);
    const double cap = ch.pmax()(k);
    if (!(mu > 0))
        return CVec::Zero(N);

    // B = U diag(b) U^H; everything below is diagonal in that basis.
    Eigen::SelfAdjointEigenSolver<CMat> es(price_matrix(ch, price, k));
    const RVec b = es.eigenvalues().cwiseMax(0.0);
    const CVec ht = es.eigenvectors().adjoint() * ch.h(k, k);
    const RVec weight = ht.cwiseAbs2();

    // For multiplier lam: v = sqrt(tau) Q^{-1} h / sqrt(h^H Q^{-1} h), Q = B + lam I,
    // tau = [mu/ln2 - floor / h^H Q^{-1} h]^+.
    struct Beam
    {
        double tau;
        double power;
    };
    auto beam = [&](double lam) -> Beam {
        double g1 = 0.0;
        double g2 = 0.0;
        for (int i = 0; i < N; ++i)
        {
            const double d = b(i) + lam;
            if (weight(i) == 0.0)
                continue;
            if (!(d > 0))
                return {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
            g1 += weight(i) / d;
            g2 += weight(i) / (d * d);
        }
        const double tau = std::max(0.0, mu / kLn2 - floor / g1);
        return {tau, tau * g2 / g1};
    };

    double lam = 0.0;
    if (!(beam(0.0).power <= cap))
    {
        // power(lam) <= tau / lam <= mu / (ln2 lam), so this bracket is valid.
        double lo = 0.0;
        double hi = mu / (kLn2 * cap);
        for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it)
        {
            const double mid = 0.5 * (lo + hi);
            if (beam(mid).power > cap)
                lo = mid;
            else
                hi = mid;
        }
        lam = hi;
    }

    const Beam best = beam(lam);
    if (best.tau <= 0)
        return CVec::Zero(N);
    CVec qinv_h(N);
    double g1 = 0.0;
    for (int i = 0; i < N; ++i)
    {
        const double d = b(i) + lam;
        qinv_h(i) = weight(i) == 0.0 ? cdouble(0.0) : ht(i) / d;
        g1 += weight(i) == 0.0 ? 0.0 : weight(i) / d;
    }
    CVec out = es.eigenvectors() * qinv_h * std::sqrt(best.tau / g1);
    const double norm2 = out.squaredNorm();
    if (norm2 > cap)
        out *= std::sqrt(cap / norm2);
    return out;
}

RunResult run_miso_pricing(const MisoChannel &ch, const RunOptions &opt)
{
    const int K = ch.users();
    RunResult res;
    Tracker tracker{ch.weights(), opt, res};
    std::vector<CVec> v(K);
    for (int k = 0; k < K; ++k)
        v[k] = ch.h(k, k) * (std::sqrt(ch.pmax()(k)) / ch.h(k, k).norm());

    for (int sweep = 1; sweep <= opt.max_sweeps; ++sweep)
    {
        const MisoPrices prices = miso_price(ch, v);
        double beam_change = 0.0;
        double power_change = 0.0;
        for (int k = 0; k < K; ++k)
        {
            CVec next = miso_beam_update(ch, v, prices.price, k);
            beam_change = std::max(beam_change, (next - v[k]).norm());
            power_change = std::max(power_change, std::abs(next.squaredNorm() - v[k].squaredNorm()));
            v[k] = std::move(next);
        }
        RVec power(K);
        for (int k = 0; k < K; ++k)
            power(k) = v[k].squaredNorm();
        const RVec rates = rate_of(sinr_miso(ch, v));
        const bool stop = tracker.record(sweep, Allocation{power, {}, v}, rates, beam_change);
        res.trajectory.back().max_power_change = power_change;
        if (stop)
            break;
    }
    return res;
}

void write_trajectory_csv(std::ostream &os, const std::vector<SweepRecord> &trajectory)
{
    const auto old_precision = os.precision(17);
    os << "sweep,wsr,max_power_change\n";
    for (const auto &r : trajectory)
        os << r.sweep << ',' << r.wsr << ',' << r.max_power_change << '\n';
    os.precision(old_precision);
}

} // namespace polywsr::pricing
