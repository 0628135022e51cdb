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

#ifndef POLYWSR_BENCH_HPP
#define POLYWSR_BENCH_HPP

#include "polywsr/channel.hpp"
#include "polywsr/polyblock.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace polywsr::bench
{

// Power gains |h_kj|^2 of the bundled four-user example and its variants.
RMat weak_four_user_gain();
RMat strong_four_user_gain(); // off-diagonal entries scaled by 10
RMat three_user_gain();

inline constexpr double kDefaultSigma2 = 0.1;
inline constexpr double kDefaultPmax = 3.0;

SisoChannel bundled_channel(const RMat &gain, double sigma2 = kDefaultSigma2, double pmax = kDefaultPmax);

// i.i.d. CN(0,1) channel draws with unit weights and equal budgets.
SisoChannel random_siso(int users, std::uint64_t seed, double sigma2, double pmax);
SimoChannel random_simo(int users, int antennas, std::uint64_t seed, double sigma2, double pmax);
MisoChannel random_miso(int users, int antennas, std::uint64_t seed, double sigma2, double pmax);

// A scalar channel viewed as SIMO with one receive antenna.
SimoChannel siso_as_simo(const SisoChannel &ch);

// Rates, WSR, witness and termination of a polyblock run. The reported rates
// are recomputed from the witness, so they revalidate by construction.
nlohmann::json solve_result_json(const Channel &ch, const SolveResult &res);

struct ReproOptions
{
    double sigma2 = kDefaultSigma2;
    std::uint64_t seed = 1;
    int instances = 20;
    std::optional<double> epsilon; // experiment default when unset
    std::optional<double> eta;
    double tol_bits = 1e-4;
    int max_iterations = 50000;
    int grid_points = 21;
};

struct Report
{
    nlohmann::json result;
    std::string trace_csv;
    std::string report_md;
};

// fig3, fig4, table5, fig5 or fig6. Unknown ids throw invalid_argument.
Report run_repro(const std::string &experiment, const ReproOptions &opt);

// result.json, trace.csv and report.md in dir (created if needed).
void write_report(const Report &report, const std::filesystem::path &dir);

} // namespace polywsr::bench

#endif
