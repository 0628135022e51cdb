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

#include "polywsr/channel_io.hpp"

#include <fstream>
#include <sstream>

namespace polywsr
{

using nlohmann::json;

namespace
{

std::pair<int, int> line_column(const std::string &text, std::size_t byte)
{
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    {
        if (text[i] == '\n')
        {
            ++line;
            column = 1;
        }
        else
        {
            ++column;
        }
    }
    return {line, column};
}

double as_number(const json &j, const std::string &what)
{
    if (!j.is_number())
        throw ConfigError(what + ": expected a number");
    return j.get<double>();
}

cdouble as_complex(const json &j, const std::string &what)
{
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2)
        throw ConfigError(what + ": expected a complex number as [re, im]");
    return {as_number(j[0], what), as_number(j[1], what)};
}

// Accepts a scalar (broadcast to K entries) or an array of K numbers.
RVec per_user(const json &doc, const char *key, int K, std::optional<double> fallback)
{
    if (!doc.contains(key))
    {
        if (!fallback)
            throw ConfigError(std::string("missing field '") + key + "'");
        return RVec::Constant(K, *fallback);
    }
    const json &j = doc.at(key);
    if (j.is_number())
        return RVec::Constant(K, j.get<double>());
    if (!j.is_array() || static_cast<int>(j.size()) != K)
        throw ConfigError(std::string("field '") + key + "' must be a number or an array of " +
                          std::to_string(K) + " numbers");
    RVec v(K);
    for (int k = 0; k < K; ++k)
        v(k) = as_number(j[k], key);
    return v;
}

std::vector<std::vector<CVec>> parse_vectors(const json &j)
{
    if (!j.is_array() || j.empty())
        throw ConfigError("field 'h' must be a non-empty K x K array of complex vectors");
    const std::size_t K = j.size();
    std::vector<std::vector<CVec>> h(K);
    for (std::size_t k = 0; k < K; ++k)
    {
        if (!j[k].is_array() || j[k].size() != K)
            throw ConfigError("field 'h' row " + std::to_string(k) + " must have " + std::to_string(K) + " entries");
        for (std::size_t m = 0; m < K; ++m)
        {
            const json &vec = j[k][m];
            if (!vec.is_array())
                throw ConfigError("h[" + std::to_string(k) + "][" + std::to_string(m) + "] must be an array");
            CVec v(static_cast<Eigen::Index>(vec.size()));
            for (std::size_t a = 0; a < vec.size(); ++a)
                v(static_cast<Eigen::Index>(a)) = as_complex(vec[a], "h entry");
            h[k].push_back(std::move(v));
        }
    }
    return h;
}

} // namespace

Instance parse_instance(const std::string &text)
{
    json doc;
    try
    {
        doc = json::parse(text);
    }
    catch (const json::parse_error &e)
    {
        const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ConfigError("malformed JSON at line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": " + e.what(),
                          line, column);
    }
    if (!doc.is_object())
        throw ConfigError("config must be a JSON object");
    if (!doc.contains("topology") || !doc["topology"].is_string())
        throw ConfigError("missing string field 'topology'");

    Topology topo;
    try
    {
        topo = topology_from_string(doc["topology"].get<std::string>());
    }
    catch (const Error &e)
    {
        throw ConfigError(e.what());
    }

    try
    {
        Instance inst{doc.value("name", std::string{}), SisoChannel(RMat::Ones(1, 1), {RVec::Ones(1), RVec::Ones(1), RVec::Ones(1)}), std::nullopt};
        int K = 0;
        if (topo == Topology::siso)
        {
            if (!doc.contains("gain") || !doc["gain"].is_array() || doc["gain"].empty())
                throw ConfigError("siso config needs a non-empty 'gain' matrix");
            const json &g = doc["gain"];
            K = static_cast<int>(g.size());
            RMat gain(K, K);
            for (int k = 0; k < K; ++k)
            {
                if (!g[k].is_array() || static_cast<int>(g[k].size()) != K)
                    throw ConfigError("gain row " + std::to_string(k) + " must have " + std::to_string(K) + " entries");
                for (int j = 0; j < K; ++j)
                    gain(k, j) = as_number(g[k][j], "gain");
            }
            UserParams p{per_user(doc, "noise", K, std::nullopt), per_user(doc, "pmax", K, std::nullopt),
                         per_user(doc, "weights", K, 1.0)};
            inst.channel = SisoChannel(std::move(gain), std::move(p));
        }
        else
        {
            if (!doc.contains("h"))
                throw ConfigError(std::string(to_string(topo)) + " config needs field 'h'");
            auto h = parse_vectors(doc["h"]);
            K = static_cast<int>(h.size());
            UserParams p{per_user(doc, "noise", K, std::nullopt), per_user(doc, "pmax", K, std::nullopt),
                         per_user(doc, "weights", K, 1.0)};
            if (topo == Topology::simo)
                inst.channel = SimoChannel(std::move(h), std::move(p));
            else
                inst.channel = MisoChannel(std::move(h), std::move(p));
        }
        if (doc.contains("rmin") && !doc["rmin"].is_null())
            inst.rmin = MinRateConstraint(inst.channel, per_user(doc, "rmin", K, std::nullopt)).rates();
        return inst;
    }
    catch (const ConfigError &)
    {
        throw;
    }
    catch (const Error &e)
    {
        throw ConfigError(e.what());
    }
}

Instance load_instance(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

json complex_to_json(cdouble z)
{
    return json::array({z.real(), z.imag()});
}

json vector_to_json(const CVec &v)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(complex_to_json(v(i)));
    return out;
}

json vector_to_json(const RVec &v)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(v(i));
    return out;
}

json to_json(const Channel &ch)
{
    json doc;
    doc["topology"] = to_string(topology_of(ch));
    const UserParams &p = params_of(ch);
    std::visit(
        [&](const auto &c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, SisoChannel>)
            {
                json g = json::array();
                for (int k = 0; k < c.users(); ++k)
                    g.push_back(vector_to_json(RVec(c.gain().row(k).transpose())));
                doc["gain"] = g;
            }
            else
            {
                json h = json::array();
                for (int k = 0; k < c.users(); ++k)
                {
                    json row = json::array();
                    for (int j = 0; j < c.users(); ++j)
                        row.push_back(vector_to_json(c.h(k, j)));
                    h.push_back(row);
                }
                doc["h"] = h;
            }
        },
        ch);
    doc["noise"] = vector_to_json(p.noise);
    doc["pmax"] = vector_to_json(p.pmax);
    doc["weights"] = vector_to_json(p.weights);
    return doc;
}

json to_json(const Instance &inst)
{
    json doc = to_json(inst.channel);
    if (!inst.name.empty())
        doc["name"] = inst.name;
    if (inst.rmin)
        doc["rmin"] = vector_to_json(*inst.rmin);
    return doc;
}

json to_json(const Allocation &a, Topology t)
{
    json out;
    out["power"] = vector_to_json(a.power);
    if (t == Topology::simo)
    {
        json w = json::array();
        for (const auto &v : a.receivers)
            w.push_back(vector_to_json(v));
        out["receivers"] = w;
    }
    if (t == Topology::miso)
    {
        json w = json::array();
        for (const auto &v : a.beamformers)
            w.push_back(vector_to_json(v));
        out["beamformers"] = w;
    }
    return out;
}

Channel with_noise(const Channel &ch, double sigma2)
{
    return std::visit(
        [&](const auto &c) -> Channel {
            using T = std::decay_t<decltype(c)>;
            UserParams p = c.params();
            p.noise.setConstant(sigma2);
            if constexpr (std::is_same_v<T, SisoChannel>)
                return SisoChannel(c.gain(), std::move(p));
            else
                return T(c.channels(), std::move(p));
        },
        ch);
}

} // namespace polywsr
