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

#ifndef POLYWSR_PRICING_HPP
#define POLYWSR_PRICING_HPP

#include "polywsr/channel.hpp"

#include <iosfwd>

namespace polywsr::pricing
{

// Interference-price heuristics. Each user announces how sensitive its rate
// is to interference and the others update their transmission against those
// prices. Convergence is not guaranteed; runs report it rather than fail.

struct RunOptions
{
    int max_sweeps = 1000;
    double tol = 1e-7;      // stop when the largest per-sweep change drops below
    int stall_window = 50;  // sweeps without a WSR improvement before giving up
};

struct SweepRecord
{
    int sweep = 0;
    double wsr = 0.0;
    double max_power_change = 0.0;
};

struct RunResult
{
    Allocation allocation;      // final iterate
    RVec rates;
    double wsr = 0.0;
    Allocation best_allocation; // best iterate seen
    double best_wsr = 0.0;
    bool converged = false;
    int sweeps = 0;
    std::vector<SweepRecord> trajectory;
};

// SIMO with MMSE receivers ------------------------------------------------

// price(j, k) = -dR_j/dp_k, the price receiver j charges transmitter k.
// The diagonal is zero.
RMat simo_price(const SimoChannel &ch, const RVec &p);

// Water-filling style best response of user k to fixed prices:
//   p_k = [ mu_k / (ln2 sum_{j!=k} mu_j price(j,k)) - 1/q_k ]_0^{P_k}
// with q_k = h_kk^H (sum_{j!=k} p_j h_kj h_kj^H + sigma_k^2 I)^{-1} h_kk.
double simo_power_update(const SimoChannel &ch, const RVec &p, const RMat &price, int k);

// The per-user objective the update maximizes; exposed for testing.
double simo_surrogate(const SimoChannel &ch, const RVec &p, const RMat &price, int k, double pk);

RunResult run_simo_pricing(const SimoChannel &ch, const RunOptions &opt = {});

// MISO ---------------------------------------------------------------------

struct MisoPrices
{
    RVec price;        // -dR_k/dGamma_k
    RVec interference; // Gamma_k = sum_{j!=k} |h_kj^H v_j|^2
};

MisoPrices miso_price(const MisoChannel &ch, const std::vector<CVec> &v);

// Maximizes mu_k log2(1 + v^H h_kk h_kk^H v / (Gamma_k + sigma_k^2)) - v^H B_k v
// over ||v||^2 <= P_k, with B_k = sum_{j!=k} mu_j price_j h_jk h_jk^H. Solved
// by bisection on the power multiplier; the optimum is a single beam.
CVec miso_beam_update(const MisoChannel &ch, const std::vector<CVec> &v, const RVec &price, int k);

double miso_surrogate(const MisoChannel &ch, const std::vector<CVec> &v, const RVec &price, int k,
                      const CVec &vk);

RunResult run_miso_pricing(const MisoChannel &ch, const RunOptions &opt = {});

/// sweep,wsr,max_power_change
void write_trajectory_csv(std::ostream &os, const std::vector<SweepRecord> &trajectory);

} // namespace polywsr::pricing

#endif
