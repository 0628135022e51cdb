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

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace
{

const fs::path kData = POLYWSR_DATA_DIR;

fs::path scratch(const std::string &name)
{
    fs::path p = fs::temp_directory_path() / ("polywsr_cli_" + std::to_string(::getpid())) / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

int run(const std::string &args)
{
    const std::string cmd = std::string(POLYWSR_CLI) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json result_of(const fs::path &dir)
{
    return nlohmann::json::parse(slurp(dir / "result.json"));
}

} // namespace

TEST_CASE("solve on the single-user config")
{
    const fs::path out = scratch("solve1");
    REQUIRE(run("solve " + (kData / "single_user.json").string() + " --out-dir " + out.string()) == 0);
    const auto doc = result_of(out);
    CHECK(doc["wsr"].get<double>() == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(doc["termination"] == "converged");
    CHECK(fs::exists(out / "trace.csv"));
    CHECK(fs::exists(out / "report.md"));
}

TEST_CASE("oracle on the single-user config")
{
    const fs::path out = scratch("oracle1");
    REQUIRE(run("oracle " + (kData / "single_user.json").string() + " --out-dir " + out.string()) == 0);
    CHECK(result_of(out)["wsr"].get<double>() == doctest::Approx(2.0));
}

TEST_CASE("baseline on orthogonal channels reaches the decoupled optimum")
{
    for (const char *cfg : {"orthogonal_simo.json", "orthogonal_miso.json"})
    {
        const fs::path out = scratch(std::string("baseline_") + cfg);
        REQUIRE(run("baseline " + (kData / cfg).string() + " --out-dir " + out.string()) == 0);
        CHECK(result_of(out)["wsr"].get<double>() == doctest::Approx(4.0));
    }
}

TEST_CASE("input errors exit with code 2")
{
    const fs::path dir = scratch("bad");
    const fs::path bad = dir / "bad.json";
    std::ofstream(bad) << "{\n  \"topology\": \"siso\",\n  \"gain\": [[1.0]\n}\n";
    CHECK(run("solve " + bad.string() + " --out-dir " + dir.string()) == 2);
    CHECK(run("solve " + (dir / "missing.json").string()) == 2);
    CHECK(run("solve " + (kData / "single_user.json").string() + " --topology miso --out-dir " + dir.string()) ==
          2);
    CHECK(run("repro fig9 --out-dir " + dir.string()) == 2);
    CHECK(run("solve") == 2);
}

TEST_CASE("identical runs give byte-identical outputs")
{
    const std::string args =
        "solve " + (kData / "weak_four_user.json").string() + " --eta 0.5 --rmin 0.5,0.5,0.5,0.5 --out-dir ";
    const fs::path a = scratch("det_a");
    const fs::path b = scratch("det_b");
    REQUIRE(run(args + a.string()) == 0);
    REQUIRE(run(args + b.string()) == 0);
    for (const char *f : {"result.json", "trace.csv", "report.md"})
        CHECK(slurp(a / f) == slurp(b / f));
}
