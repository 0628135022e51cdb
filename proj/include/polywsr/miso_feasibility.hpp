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

#ifndef POLYWSR_MISO_FEASIBILITY_HPP
#define POLYWSR_MISO_FEASIBILITY_HPP

#include "polywsr/channel.hpp"
#include "polywsr/feasibility.hpp"
#include "polywsr/socp.hpp"

#include <json.hpp>

namespace polywsr::miso
{

/// Second-order cone form of the MISO SINR constraints over the stacked
/// beamformer x = [v_1; ...; v_K; 0] in C^n, n = sum_k N_k + 1:
///
///   ||E_k x + n_k|| <= sqrt(1 + 1/target_k) Re(h_kk^H L_k x),  Im(h_kk^H L_k x) = 0
///   ||L_k x||       <= sqrt(P_k)
///
/// E_k is (K+1) x n with h_kj^H in block (j, j) and a zero last row; n_k is
/// zero except sigma_k in its last entry; L_k selects the block of user k.
struct ConeProgram
{
    int users = 0;
    int dimension = 0;             // n
    std::vector<int> offsets;      // start of v_k in x
    std::vector<int> antennas;     // N_k
    std::vector<int> sinr_users;   // users owning an SINR cone (target > 0)
    std::vector<CMat> E;           // one per SINR cone
    std::vector<CVec> noise_offset; // n_k, one per SINR cone
    std::vector<double> cone_scale; // sqrt(1 + 1/target_k), one per SINR cone
    std::vector<CVec> direct;      // h_kk^H L_k as a length-n row (stored as column)
    std::vector<double> power_radius; // sqrt(P_k), one per user

    CMat selector(int k) const; // L_k, N_k x n
};

ConeProgram build_cone_program(const MisoChannel &ch, const RVec &target);

/// Real embedding used by the solver. Variables are [Re x'; Im x'; s] where
/// x' drops the trailing zero coordinate of x and s is the phase-I slack
/// added to the right-hand side of every SINR cone.
socp::Problem to_phase_one(const ConeProgram &prog);

nlohmann::json to_json(const ConeProgram &prog);

/// Decides the target by minimizing the phase-I slack. A feasible answer
/// always carries a beamformer witness that re-validates through sinr_miso
/// within 1e-8 relative SINR. Throws solver_failure when the conic solve
/// cannot reach a decision.
FeasibilityOutcome check_feasible(const MisoChannel &ch, const RVec &target);

} // namespace polywsr::miso

#endif
