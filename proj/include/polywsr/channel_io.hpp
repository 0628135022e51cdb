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

#ifndef POLYWSR_CHANNEL_IO_HPP
#define POLYWSR_CHANNEL_IO_HPP

#include "polywsr/channel.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>

namespace polywsr
{

// A channel as read from a config document, see docs/config_format.md.
struct Instance
{
    std::string name;
    Channel channel;
    std::optional<RVec> rmin;
};

// Thrown for unreadable or malformed config documents. line/column are
// 1-based and zero when the failure is not tied to a position.
class ConfigError : public Error
{
public:
    ConfigError(const std::string &what, int line = 0, int column = 0)
        : Error(ErrorCode::invalid_argument, what), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

Instance parse_instance(const std::string &text);
Instance load_instance(const std::filesystem::path &path);

nlohmann::json to_json(const Channel &ch);
nlohmann::json to_json(const Instance &inst);
nlohmann::json to_json(const Allocation &a, Topology t);

nlohmann::json complex_to_json(cdouble z);
nlohmann::json vector_to_json(const CVec &v);
nlohmann::json vector_to_json(const RVec &v);

// Same channel with every sigma_k^2 replaced by `sigma2`.
Channel with_noise(const Channel &ch, double sigma2);

} // namespace polywsr

#endif
