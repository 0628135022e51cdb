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

#ifndef POLYWSR_CHANNEL_HPP
#define POLYWSR_CHANNEL_HPP

#include "polywsr/common.hpp"

#include <optional>
#include <variant>

namespace polywsr
{

enum class Topology
{
    siso,
    simo,
    miso
};

const char *to_string(Topology t);
Topology topology_from_string(const std::string &s);

// Per-user quantities shared by all three topologies.
struct UserParams
{
    RVec noise;   // sigma_k^2 > 0
    RVec pmax;    // P_k^max > 0
    RVec weights; // mu_k >= 0, at least one positive
};

// Single-antenna interference channel stored as power gains.
// gain(k, j) = |h_{k,j}|^2 is the gain from transmitter j to receiver k.
class SisoChannel
{
public:
    SisoChannel(RMat gain, UserParams params);

    int users() const { return static_cast<int>(gain_.rows()); }
    const RMat &gain() const { return gain_; }
    double gain(int k, int j) const { return gain_(k, j); }
    const RVec &noise() const { return params_.noise; }
    const RVec &pmax() const { return params_.pmax; }
    const RVec &weights() const { return params_.weights; }
    const UserParams &params() const { return params_; }

    // Channel seen by the listed users only.
    SisoChannel restrict_to(const std::vector<int> &users) const;

private:
    RMat gain_;
    UserParams params_;
};

// Multi-antenna receivers: h[k][j] has length M_k (channel from tx j to rx k).
class SimoChannel
{
public:
    SimoChannel(std::vector<std::vector<CVec>> h, UserParams params);

    int users() const { return static_cast<int>(h_.size()); }
    int antennas(int k) const { return static_cast<int>(h_[k][k].size()); }
    const CVec &h(int k, int j) const { return h_[k][j]; }
    const std::vector<std::vector<CVec>> &channels() const { return h_; }
    const RVec &noise() const { return params_.noise; }
    const RVec &pmax() const { return params_.pmax; }
    const RVec &weights() const { return params_.weights; }
    const UserParams &params() const { return params_; }

    SimoChannel restrict_to(const std::vector<int> &users) const;

private:
    std::vector<std::vector<CVec>> h_;
    UserParams params_;
};

// Multi-antenna transmitters: h[k][j] has length N_j (channel from tx j to rx k).
class MisoChannel
{
public:
    MisoChannel(std::vector<std::vector<CVec>> h, UserParams params);

    int users() const { return static_cast<int>(h_.size()); }
    int antennas(int k) const { return static_cast<int>(h_[k][k].size()); }
    const CVec &h(int k, int j) const { return h_[k][j]; }
    const std::vector<std::vector<CVec>> &channels() const { return h_; }
    const RVec &noise() const { return params_.noise; }
    const RVec &pmax() const { return params_.pmax; }
    const RVec &weights() const { return params_.weights; }
    const UserParams &params() const { return params_; }

    MisoChannel restrict_to(const std::vector<int> &users) const;

private:
    std::vector<std::vector<CVec>> h_;
    UserParams params_;
};

using Channel = std::variant<SisoChannel, SimoChannel, MisoChannel>;

Topology topology_of(const Channel &ch);
int users_of(const Channel &ch);
const UserParams &params_of(const Channel &ch);

// Minimum-rate requirements. Each entry must lie in [0, z_k^(1)).
class MinRateConstraint
{
public:
    MinRateConstraint(const Channel &ch, RVec rmin);

    const RVec &rates() const { return rmin_; }

private:
    RVec rmin_;
};

RVec sinr_siso(const SisoChannel &ch, const RVec &p);

// w_k = (sum_{j != k} p_j h_kj h_kj^H + sigma_k^2 I)^{-1} h_kk, unnormalized.
std::vector<CVec> mmse_receivers(const SimoChannel &ch, const RVec &p);

// SINR for arbitrary receive beamformers.
RVec sinr_simo(const SimoChannel &ch, const RVec &p, const std::vector<CVec> &w);

struct MmseSinr
{
    RVec sinr;
    std::vector<CVec> receivers;
};

MmseSinr sinr_simo_mmse(const SimoChannel &ch, const RVec &p);

// Throws when some ||v_k||^2 exceeds P_k^max by more than a rounding margin.
RVec sinr_miso(const MisoChannel &ch, const std::vector<CVec> &v);

RVec rate_of(const RVec &sinr);

double weighted_sum(const RVec &weights, const RVec &rates);

// Single-user capacities: the box [0, z] contains the rate region.
RVec initial_vertex(const Channel &ch);

// Rates delivered by an allocation (MMSE receivers are recomputed for SIMO).
RVec rates_of_allocation(const Channel &ch, const Allocation &a);

} // namespace polywsr

#endif
