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

#ifndef POLYWSR_COMMON_HPP
#define POLYWSR_COMMON_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace polywsr
{

using cdouble = std::complex<double>;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

enum class ErrorCode
{
    invalid_argument,      // dimension mismatch, malformed input
    empty_epsilon_set,     // no vertex survives the strip filter
    infeasible_min_rates,  // the minimum-rate point itself is not achievable
    spectral_radius_at_least_one,
    non_positive_eigenvector,
    no_admissible_subproblem,
    solver_failure,
    resource_limit
};

const char *to_string(ErrorCode code);

class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Operating point of a channel. SISO uses `power` only, SIMO uses `power` and
// `receivers`, MISO uses `beamformers` (power is filled with ||v_k||^2).
struct Allocation
{
    RVec power;
    std::vector<CVec> receivers;
    std::vector<CVec> beamformers;
};

// Relative SINR slack accepted when a witness is re-checked against a target.
inline constexpr double kWitnessSlack = 1e-8;

inline void require(bool cond, const std::string &msg)
{
    if (!cond)
        throw Error(ErrorCode::invalid_argument, msg);
}

} // namespace polywsr

#endif
