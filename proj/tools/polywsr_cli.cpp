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

// polywsr command-line front end.
//
//   polywsr solve    CONFIG   polyblock WSR optimum of one instance
//   polywsr oracle   CONFIG   brute-force reference (grid for SISO, random search otherwise)
//   polywsr baseline CONFIG   interference-pricing heuristic (SIMO or MISO; SISO runs as SIMO)
//   polywsr repro    ID       fig3 | fig4 | table5 | fig5 | fig6
//
// Each command writes result.json, trace.csv and report.md to --out-dir.
// Exit status: 0 success, 1 solver or numerical failure, 2 input error.

#include "polywsr/bench.hpp"
#include "polywsr/channel_io.hpp"
#include "polywsr/oracles.hpp"
#include "polywsr/pricing.hpp"
#include "polywsr/wsr.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

using namespace polywsr;
using nlohmann::json;

namespace
{

struct Args
{
    std::string config;
    std::string experiment;
    std::string topology;
    double epsilon = 0.01;
    double eta = 0.1;
    double bisect_tol = kDefaultBisectionTol;
    int max_iters = 50000;
    std::uint64_t seed = 1;
    std::vector<double> rmin;
    std::optional<double> sigma2;
    std::string out_dir = ".";
    int grid_points = 41;
    long long samples = 100000;
    int instances = 20;
    bool no_faces = false;
};

Instance load(const Args &a)
{
    Instance inst = load_instance(a.config);
    if (!a.topology.empty() && topology_from_string(a.topology) != topology_of(inst.channel))
        throw ConfigError("--topology " + a.topology + " does not match the config topology " +
                          to_string(topology_of(inst.channel)));
    if (a.sigma2)
        inst.channel = with_noise(inst.channel, *a.sigma2);
    if (!a.rmin.empty())
        inst.rmin = Eigen::Map<const RVec>(a.rmin.data(), static_cast<Eigen::Index>(a.rmin.size()));
    return inst;
}

std::string header(const std::string &title, const Instance &inst)
{
    std::ostringstream md;
    md << "# " << title << ": " << (inst.name.empty() ? "unnamed instance" : inst.name) << "\n\n"
       << to_string(topology_of(inst.channel)) << ", " << users_of(inst.channel) << " users.\n\n";
    return md.str();
}

int cmd_solve(const Args &a)
{
    const Instance inst = load(a);
    WsrOptions opt;
    opt.epsilon = a.epsilon;
    opt.eta = a.eta;
    opt.tol_bits = a.bisect_tol;
    opt.max_iterations = a.max_iters;
    opt.rmin = inst.rmin;
    opt.explore_faces = !a.no_faces;
    const SolveResult res = solve_wsr(inst.channel, opt);

    bench::Report r;
    r.result = bench::solve_result_json(inst.channel, res);
    r.result["instance"] = inst.name;
    r.result["epsilon"] = a.epsilon;
    r.result["eta"] = a.eta;
    std::ostringstream trace;
    write_trace_csv(trace, res.trace);
    r.trace_csv = trace.str();
    std::ostringstream md;
    md << header("solve", inst) << "WSR " << r.result["wsr"] << " after " << res.iterations
       << " iterations (upper bound " << res.upper_bound << ", " << to_string(res.termination) << ").\n";
    r.report_md = md.str();
    bench::write_report(r, a.out_dir);
    std::cout << std::setprecision(10) << "wsr " << r.result["wsr"].get<double>() << " iterations " << res.iterations
              << ' ' << to_string(res.termination) << '\n';
    return 0;
}

int cmd_oracle(const Args &a)
{
    const Instance inst = load(a);
    bench::Report r;
    r.result["instance"] = inst.name;
    double wsr = 0.0;
    std::visit(
        [&](const auto &ch) {
            using T = std::decay_t<decltype(ch)>;
            if constexpr (std::is_same_v<T, SisoChannel>)
            {
                const oracles::GridResult g = oracles::grid_wsr_siso(ch, a.grid_points, inst.rmin);
                wsr = g.wsr;
                r.result["method"] = "grid";
                r.result["points_per_dim"] = a.grid_points;
                r.result["power"] = vector_to_json(g.power);
                r.result["rates"] = vector_to_json(rate_of(sinr_siso(ch, g.power)));
            }
            else
            {
                oracles::SearchResult s;
                if constexpr (std::is_same_v<T, SimoChannel>)
                    s = oracles::random_wsr_simo(ch, a.samples, a.seed);
                else
                    s = oracles::random_wsr_miso(ch, a.samples, a.seed);
                wsr = s.value;
                r.result["method"] = "random";
                r.result["samples"] = a.samples;
                r.result["seed"] = a.seed;
                r.result["rates"] = vector_to_json(rate_of(s.sinr));
                r.result["witness"] = to_json(s.allocation, topology_of(inst.channel));
            }
        },
        inst.channel);
    r.result["wsr"] = wsr;
    r.trace_csv = "wsr\n" + r.result["wsr"].dump() + "\n";
    r.report_md = header("oracle", inst) + "Best WSR found: " + r.result["wsr"].dump() + ".\n";
    bench::write_report(r, a.out_dir);
    std::cout << std::setprecision(10) << "wsr " << wsr << '\n';
    return 0;
}

int cmd_baseline(const Args &a)
{
    const Instance inst = load(a);
    pricing::RunOptions opt;
    opt.max_sweeps = a.max_iters;
    pricing::RunResult res;
    std::visit(
        [&](const auto &ch) {
            using T = std::decay_t<decltype(ch)>;
            if constexpr (std::is_same_v<T, MisoChannel>)
                res = pricing::run_miso_pricing(ch, opt);
            else if constexpr (std::is_same_v<T, SimoChannel>)
                res = pricing::run_simo_pricing(ch, opt);
            else
                res = pricing::run_simo_pricing(bench::siso_as_simo(ch), opt);
        },
        inst.channel);

    const Topology t = topology_of(inst.channel) == Topology::miso ? Topology::miso : Topology::simo;
    bench::Report r;
    r.result = {{"instance", inst.name},
                {"wsr", res.wsr},
                {"rates", vector_to_json(res.rates)},
                {"best_wsr", res.best_wsr},
                {"converged", res.converged},
                {"sweeps", res.sweeps},
                {"witness", to_json(res.allocation, t)}};
    std::ostringstream trace;
    pricing::write_trajectory_csv(trace, res.trajectory);
    r.trace_csv = trace.str();
    std::ostringstream md;
    md << header("baseline", inst) << "Pricing WSR " << res.wsr << " after " << res.sweeps << " sweeps, "
       << (res.converged ? "converged" : "not converged") << ". Best WSR seen " << res.best_wsr << ".\n";
    r.report_md = md.str();
    bench::write_report(r, a.out_dir);
    std::cout << std::setprecision(10) << "wsr " << res.wsr << (res.converged ? " converged" : " not-converged")
              << '\n';
    return 0;
}

int cmd_repro(const Args &a, const CLI::App &sub)
{
    bench::ReproOptions opt;
    if (a.sigma2)
        opt.sigma2 = *a.sigma2;
    opt.seed = a.seed;
    opt.instances = a.instances;
    opt.tol_bits = a.bisect_tol;
    opt.max_iterations = a.max_iters;
    if (sub.count("--epsilon"))
        opt.epsilon = a.epsilon;
    if (sub.count("--eta"))
        opt.eta = a.eta;
    if (sub.count("--grid-points"))
        opt.grid_points = a.grid_points;
    const bench::Report r = bench::run_repro(a.experiment, opt);
    bench::write_report(r, a.out_dir);
    std::cout << r.report_md;
    return 0;
}

void add_common(CLI::App *sub, Args &a)
{
    sub->add_option("--topology", a.topology, "Expected topology")->check(CLI::IsMember({"siso", "simo", "miso"}));
    sub->add_option("--epsilon", a.epsilon, "Strip width around the origin");
    sub->add_option("--eta", a.eta, "Optimality gap tolerance");
    sub->add_option("--bisect-tol", a.bisect_tol, "Sum-rate bisection tolerance in bits");
    sub->add_option("--max-iters", a.max_iters, "Iteration cap");
    sub->add_option("--seed", a.seed, "Random seed");
    sub->add_option("--rmin", a.rmin, "Minimum rates, comma separated")->delimiter(',');
    sub->add_option("--sigma2", a.sigma2, "Override the noise power of every user");
    sub->add_option("--out-dir", a.out_dir, "Directory for result.json, trace.csv, report.md");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Globally optimal weighted sum-rate for Gaussian interference channels"};
    app.require_subcommand(1);
    Args a;

    CLI::App *solve = app.add_subcommand("solve", "Polyblock WSR optimum");
    solve->add_option("config", a.config, "Instance JSON")->required();
    solve->add_flag("--no-faces", a.no_faces, "Do not re-solve with users switched off");
    add_common(solve, a);

    CLI::App *oracle = app.add_subcommand("oracle", "Brute-force reference");
    oracle->add_option("config", a.config, "Instance JSON")->required();
    oracle->add_option("--grid-points", a.grid_points, "Grid points per dimension (SISO)");
    oracle->add_option("--samples", a.samples, "Random samples (SIMO, MISO)");
    add_common(oracle, a);

    CLI::App *baseline = app.add_subcommand("baseline", "Interference-pricing heuristic");
    baseline->add_option("config", a.config, "Instance JSON")->required();
    add_common(baseline, a);

    CLI::App *repro = app.add_subcommand("repro", "Reproduce an experiment");
    repro->add_option("experiment", a.experiment, "fig3, fig4, table5, fig5 or fig6")->required();
    repro->add_option("--instances", a.instances, "Random instances (fig5, fig6)");
    repro->add_option("--grid-points", a.grid_points, "Grid points per dimension for the reference search");
    add_common(repro, a);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try
    {
        if (*solve)
            return cmd_solve(a);
        if (*oracle)
            return cmd_oracle(a);
        if (*baseline)
            return cmd_baseline(a);
        return cmd_repro(a, *repro);
    }
    catch (const ConfigError &e)
    {
        std::cerr << "error: " << e.what();
        if (e.line() > 0)
            std::cerr << " (line " << e.line() << ", column " << e.column() << ')';
        std::cerr << '\n';
        return 2;
    }
    catch (const Error &e)
    {
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        return e.code() == ErrorCode::invalid_argument ? 2 : 1;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
