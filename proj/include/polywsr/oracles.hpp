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

#ifndef POLYWSR_ORACLES_HPP
#define POLYWSR_ORACLES_HPP

#include "polywsr/channel.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>

namespace polywsr::oracles
{

struct GridResult
{
    double wsr = -std::numeric_limits<double>::infinity(); // -inf when nothing meets rmin
    RVec power;
    long long evaluated = 0;
};

inline constexpr long long kDefaultGridCap = 100'000'000;

// Exhaustive search over a uniform power grid on [0, P_k]^K. Points whose
// rates fall below rmin are skipped. Throws resource_limit when the grid has
// more than `cap` points.
GridResult grid_wsr_siso(const SisoChannel &ch, int points_per_dim, const std::optional<RVec> &rmin = {},
                         long long cap = kDefaultGridCap);

struct SearchResult
{
    bool found = false;  // target searches: some sample met every target
    double value = -std::numeric_limits<double>::infinity();
    Allocation allocation;
    RVec sinr;
};

// Target searches maximize min_k sinr_k / target_k over random allocations;
// `found` means the best sample reached 1. Users with a zero target are
// ignored in the ratio. Powers are uniform on [0, P_k], MISO directions are
// uniform on the complex unit sphere, SIMO receivers are MMSE.
SearchResult random_search_simo(const SimoChannel &ch, const RVec &target, long long samples, std::uint64_t seed);
SearchResult random_search_miso(const MisoChannel &ch, const RVec &target, long long samples, std::uint64_t seed);

// Best weighted sum-rate among random allocations.
SearchResult random_wsr_simo(const SimoChannel &ch, long long samples, std::uint64_t seed);
SearchResult random_wsr_miso(const MisoChannel &ch, long long samples, std::uint64_t seed);

RVec finite_diff(const std::function<double(const RVec &)> &f, const RVec &x, double h);

} // namespace polywsr::oracles

#endif
