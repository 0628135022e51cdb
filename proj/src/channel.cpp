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

#include "polywsr/channel.hpp"

#include <cmath>

namespace polywsr
{

const char *to_string(ErrorCode code)
{
    switch (code)
    {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::empty_epsilon_set: return "empty_epsilon_set";
    case ErrorCode::infeasible_min_rates: return "infeasible_min_rates";
    case ErrorCode::spectral_radius_at_least_one: return "spectral_radius_at_least_one";
    case ErrorCode::non_positive_eigenvector: return "non_positive_eigenvector";
    case ErrorCode::no_admissible_subproblem: return "no_admissible_subproblem";
    case ErrorCode::solver_failure: return "solver_failure";
    case ErrorCode::resource_limit: return "resource_limit";
    }
    return "unknown";
}

const char *to_string(Topology t)
{
    switch (t)
    {
    case Topology::siso: return "siso";
    case Topology::simo: return "simo";
    case Topology::miso: return "miso";
    }
    return "unknown";
}

Topology topology_from_string(const std::string &s)
{
    if (s == "siso")
        return Topology::siso;
    if (s == "simo")
        return Topology::simo;
    if (s == "miso")
        return Topology::miso;
    throw Error(ErrorCode::invalid_argument, "unknown topology '" + s + "'");
}

namespace
{

void validate_params(const UserParams &p, int K)
{
    require(K >= 1, "channel needs at least one user");
    require(p.noise.size() == K, "noise vector length must equal the user count");
    require(p.pmax.size() == K, "pmax vector length must equal the user count");
    require(p.weights.size() == K, "weight vector length must equal the user count");
    bool any_positive = false;
    for (int k = 0; k < K; ++k)
    {
        require(std::isfinite(p.noise(k)) && p.noise(k) > 0, "noise variances must be positive");
        require(std::isfinite(p.pmax(k)) && p.pmax(k) > 0, "power budgets must be positive");
        require(std::isfinite(p.weights(k)) && p.weights(k) >= 0, "weights must be nonnegative");
        any_positive = any_positive || p.weights(k) > 0;
    }
    require(any_positive, "at least one weight must be positive");
}

UserParams restrict_params(const UserParams &p, const std::vector<int> &users)
{
    const int n = static_cast<int>(users.size());
    UserParams out{RVec(n), RVec(n), RVec(n)};
    for (int a = 0; a < n; ++a)
    {
        out.noise(a) = p.noise(users[a]);
        out.pmax(a) = p.pmax(users[a]);
        out.weights(a) = p.weights(users[a]);
    }
    // A restricted channel may carry only zero-weight users; keep it valid.
    if (out.weights.size() > 0 && out.weights.maxCoeff() <= 0)
        out.weights.setOnes();
    return out;
}

std::vector<std::vector<CVec>> restrict_vectors(const std::vector<std::vector<CVec>> &h,
                                                const std::vector<int> &users)
{
    std::vector<std::vector<CVec>> out(users.size());
    for (std::size_t a = 0; a < users.size(); ++a)
    {
        out[a].reserve(users.size());
        for (std::size_t b = 0; b < users.size(); ++b)
            out[a].push_back(h[users[a]][users[b]]);
    }
    return out;
}

void validate_vectors(const std::vector<std::vector<CVec>> &h, bool receive_side)
{
    const int K = static_cast<int>(h.size());
    require(K >= 1, "channel needs at least one user");
    for (int k = 0; k < K; ++k)
    {
        require(static_cast<int>(h[k].size()) == K, "channel row " + std::to_string(k) + " must have K entries");
        require(h[k][k].size() >= 1, "antenna counts must be at least one");
    }
    for (int k = 0; k < K; ++k)
    {
        for (int j = 0; j < K; ++j)
        {
            const Eigen::Index expected = receive_side ? h[k][k].size() : h[j][j].size();
            require(h[k][j].size() == expected,
                    "channel h[" + std::to_string(k) + "][" + std::to_string(j) + "] has inconsistent length");
            require(h[k][j].allFinite(), "channel coefficients must be finite");
        }
        require(h[k][k].norm() > 0, "direct channels must be nonzero");
    }
}

} // namespace

SisoChannel::SisoChannel(RMat gain, UserParams params)
    : gain_(std::move(gain)), params_(std::move(params))
{
    const int K = static_cast<int>(gain_.rows());
    require(gain_.rows() == gain_.cols(), "gain matrix must be square");
    validate_params(params_, K);
    require(gain_.allFinite() && gain_.minCoeff() >= 0, "gains must be finite and nonnegative");
    for (int k = 0; k < K; ++k)
        require(gain_(k, k) > 0, "direct gains must be positive");
}

SisoChannel SisoChannel::restrict_to(const std::vector<int> &users) const
{
    const int n = static_cast<int>(users.size());
    RMat g(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g(a, b) = gain_(users[a], users[b]);
    return SisoChannel(std::move(g), restrict_params(params_, users));
}

SimoChannel::SimoChannel(std::vector<std::vector<CVec>> h, UserParams params)
    : h_(std::move(h)), params_(std::move(params))
{
    validate_vectors(h_, true);
    validate_params(params_, users());
}

SimoChannel SimoChannel::restrict_to(const std::vector<int> &users) const
{
    return SimoChannel(restrict_vectors(h_, users), restrict_params(params_, users));
}

MisoChannel::MisoChannel(std::vector<std::vector<CVec>> h, UserParams params)
    : h_(std::move(h)), params_(std::move(params))
{
    validate_vectors(h_, false);
    validate_params(params_, users());
}

MisoChannel MisoChannel::restrict_to(const std::vector<int> &users) const
{
    return MisoChannel(restrict_vectors(h_, users), restrict_params(params_, users));
}

Topology topology_of(const Channel &ch)
{
    return static_cast<Topology>(ch.index());
}

int users_of(const Channel &ch)
{
    return std::visit([](const auto &c) { return c.users(); }, ch);
}

const UserParams &params_of(const Channel &ch)
{
    return std::visit([](const auto &c) -> const UserParams & { return c.params(); }, ch);
}

MinRateConstraint::MinRateConstraint(const Channel &ch, RVec rmin)
    : rmin_(std::move(rmin))
{
    const RVec z1 = initial_vertex(ch);
    require(rmin_.size() == z1.size(), "minimum-rate vector length must equal the user count");
    for (Eigen::Index k = 0; k < rmin_.size(); ++k)
    {
        require(std::isfinite(rmin_(k)) && rmin_(k) >= 0, "minimum rates must be nonnegative");
        require(rmin_(k) < z1(k), "minimum rate of user " + std::to_string(k) +
                                      " is not below its single-user capacity");
    }
}

RVec sinr_siso(const SisoChannel &ch, const RVec &p)
{
    const int K = ch.users();
    require(p.size() == K, "power vector length must equal the user count");
    RVec gamma(K);
    for (int k = 0; k < K; ++k)
    {
        double interference = ch.noise()(k);
        for (int j = 0; j < K; ++j)
            if (j != k)
                interference += ch.gain(k, j) * p(j);
        gamma(k) = ch.gain(k, k) * p(k) / interference;
    }
    return gamma;
}

namespace
{

CMat interference_covariance(const SimoChannel &ch, const RVec &p, int k)
{
    const int M = ch.antennas(k);
    CMat cov = CMat::Identity(M, M) * ch.noise()(k);
    for (int j = 0; j < ch.users(); ++j)
        if (j != k && p(j) != 0.0)
            cov.noalias() += p(j) * ch.h(k, j) * ch.h(k, j).adjoint();
    return cov;
}

} // namespace

std::vector<CVec> mmse_receivers(const SimoChannel &ch, const RVec &p)
{
    require(p.size() == ch.users(), "power vector length must equal the user count");
    std::vector<CVec> w(ch.users());
    for (int k = 0; k < ch.users(); ++k)
        w[k] = interference_covariance(ch, p, k).llt().solve(ch.h(k, k));
    return w;
}

RVec sinr_simo(const SimoChannel &ch, const RVec &p, const std::vector<CVec> &w)
{
    const int K = ch.users();
    require(p.size() == K && static_cast<int>(w.size()) == K, "allocation size must equal the user count");
    RVec gamma(K);
    for (int k = 0; k < K; ++k)
    {
        require(w[k].size() == ch.antennas(k), "receive beamformer has wrong length");
        double interference = ch.noise()(k) * w[k].squaredNorm();
        for (int j = 0; j < K; ++j)
            if (j != k)
                interference += p(j) * std::norm(w[k].dot(ch.h(k, j)));
        const double signal = p(k) * std::norm(w[k].dot(ch.h(k, k)));
        gamma(k) = interference > 0 ? signal / interference : 0.0;
    }
    return gamma;
}

MmseSinr sinr_simo_mmse(const SimoChannel &ch, const RVec &p)
{
    MmseSinr out;
    out.receivers = mmse_receivers(ch, p);
    out.sinr.resize(ch.users());
    for (int k = 0; k < ch.users(); ++k)
    {
        // h^H C^{-1} h is real for Hermitian positive definite C.
        out.sinr(k) = p(k) * std::max(0.0, ch.h(k, k).dot(out.receivers[k]).real());
    }
    return out;
}

RVec sinr_miso(const MisoChannel &ch, const std::vector<CVec> &v)
{
    const int K = ch.users();
    require(static_cast<int>(v.size()) == K, "beamformer count must equal the user count");
    for (int k = 0; k < K; ++k)
    {
        require(v[k].size() == ch.antennas(k), "transmit beamformer has wrong length");
        require(v[k].squaredNorm() <= ch.pmax()(k) * (1.0 + 1e-12),
                "beamformer of user " + std::to_string(k) + " exceeds its power budget");
    }
    RVec gamma(K);
    for (int k = 0; k < K; ++k)
    {
        double interference = ch.noise()(k);
        for (int j = 0; j < K; ++j)
            if (j != k)
                interference += std::norm(ch.h(k, j).dot(v[j]));
        gamma(k) = std::norm(ch.h(k, k).dot(v[k])) / interference;
    }
    return gamma;
}

RVec rate_of(const RVec &sinr)
{
    RVec r(sinr.size());
    for (Eigen::Index k = 0; k < sinr.size(); ++k)
        r(k) = std::log2(1.0 + std::max(0.0, sinr(k)));
    return r;
}

double weighted_sum(const RVec &weights, const RVec &rates)
{
    require(weights.size() == rates.size(), "weights and rates differ in length");
    return weights.dot(rates);
}

RVec initial_vertex(const Channel &ch)
{
    return std::visit(
        [](const auto &c) {
            using T = std::decay_t<decltype(c)>;
            const int K = c.users();
            RVec z(K);
            for (int k = 0; k < K; ++k)
            {
                double g;
                if constexpr (std::is_same_v<T, SisoChannel>)
                    g = c.gain(k, k);
                else
                    g = c.h(k, k).squaredNorm();
                z(k) = std::log2(1.0 + c.pmax()(k) * g / c.noise()(k));
            }
            return z;
        },
        ch);
}

RVec rates_of_allocation(const Channel &ch, const Allocation &a)
{
    return std::visit(
        [&](const auto &c) -> RVec {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, SisoChannel>)
                return rate_of(sinr_siso(c, a.power));
            else if constexpr (std::is_same_v<T, SimoChannel>)
                return rate_of(sinr_simo_mmse(c, a.power).sinr);
            else
                return rate_of(sinr_miso(c, a.beamformers));
        },
        ch);
}

} // namespace polywsr
