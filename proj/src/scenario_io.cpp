// SPDX-License-Identifier: Apache-2.0
//
// holosec  Secrecy simulation toolkit for holographic MIMO surfaces
// Copyright (C) 2026 The holosec contributors
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

#include "holosec/scenario_io.hpp"

#include "holosec/beamforming.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace holosec
{

using nlohmann::json;

// ------------------------------------------------------------------------- config serialization

namespace
{

json node_to_json(const NodeConfig &node)
{
    return json{{"n_x", node.n_x},
                {"n_y", node.n_y},
                {"spacing", node.spacing},
                {"position", {node.position(0), node.position(1), node.position(2)}}};
}

void reject_unknown(const json &j, const std::vector<std::string> &known,
                    const std::string &where)
{
    for (const auto &[key, value] : j.items())
    {
        (void)value;
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw std::invalid_argument("config: unknown key \"" + key + "\" in " + where);
    }
}

NodeConfig node_from_json(const json &j, const std::string &where)
{
    if (!j.is_object())
        throw std::invalid_argument("config: " + where + " must be an object");
    reject_unknown(j, {"n_x", "n_y", "spacing", "position"}, where);

    NodeConfig node;
    if (j.contains("n_x"))
        node.n_x = j.at("n_x").get<arma::uword>();
    if (j.contains("n_y"))
        node.n_y = j.at("n_y").get<arma::uword>();
    if (j.contains("spacing"))
        node.spacing = j.at("spacing").get<double>();
    if (j.contains("position"))
    {
        const auto &p = j.at("position");
        if (!p.is_array() || p.size() != 3)
            throw std::invalid_argument("config: " + where + ".position must be [x, y, z]");
        node.position = {p.at(0).get<double>(), p.at(1).get<double>(), p.at(2).get<double>()};
    }
    return node;
}

json solver_to_json(const SolverOptions &s)
{
    return json{{"barrier_t0", s.barrier_t0},
                {"barrier_mu", s.barrier_mu},
                {"barrier_tol", s.barrier_tol},
                {"newton_tol", s.newton_tol},
                {"newton_max", s.newton_max},
                {"backtrack_slope", s.backtrack_slope},
                {"backtrack_shrink", s.backtrack_shrink},
                {"sca_max_iterations", s.sca_max_iterations},
                {"sca_tol", s.sca_tol},
                {"alpha_floor", s.alpha_floor}};
}

SolverOptions solver_from_json(const json &j)
{
    reject_unknown(j,
                   {"barrier_t0", "barrier_mu", "barrier_tol", "newton_tol", "newton_max",
                    "backtrack_slope", "backtrack_shrink", "sca_max_iterations", "sca_tol",
                    "alpha_floor"},
                   "solver");

    SolverOptions s;
    if (j.contains("barrier_t0"))
        s.barrier_t0 = j.at("barrier_t0").get<double>();
    if (j.contains("barrier_mu"))
        s.barrier_mu = j.at("barrier_mu").get<double>();
    if (j.contains("barrier_tol"))
        s.barrier_tol = j.at("barrier_tol").get<double>();
    if (j.contains("newton_tol"))
        s.newton_tol = j.at("newton_tol").get<double>();
    if (j.contains("newton_max"))
        s.newton_max = j.at("newton_max").get<arma::uword>();
    if (j.contains("backtrack_slope"))
        s.backtrack_slope = j.at("backtrack_slope").get<double>();
    if (j.contains("backtrack_shrink"))
        s.backtrack_shrink = j.at("backtrack_shrink").get<double>();
    if (j.contains("sca_max_iterations"))
        s.sca_max_iterations = j.at("sca_max_iterations").get<arma::uword>();
    if (j.contains("sca_tol"))
        s.sca_tol = j.at("sca_tol").get<double>();
    if (j.contains("alpha_floor"))
        s.alpha_floor = j.at("alpha_floor").get<double>();
    return s;
}

std::string pa_mode_name(PaMode mode)
{
    switch (mode)
    {
    case PaMode::proposed:
        return "proposed";
    case PaMode::fixed:
        return "fixed";
    default:
        return "both";
    }
}

PaMode pa_mode_from_name(const std::string &name)
{
    if (name == "proposed")
        return PaMode::proposed;
    if (name == "fixed")
        return PaMode::fixed;
    if (name == "both")
        return PaMode::both;
    throw std::invalid_argument("config: pa_mode must be proposed, fixed or both, got \"" + name +
                                "\"");
}

} // namespace

json config_to_json(const ScenarioConfig &config)
{
    json bobs = json::array();
    for (const NodeConfig &bob : config.bobs)
        bobs.push_back(node_to_json(bob));

    return json{{"alice", node_to_json(config.alice)},
                {"bobs", bobs},
                {"eve", node_to_json(config.eve)},
                {"path_loss_exponent", config.path_loss_exponent},
                {"array_gain", config.array_gain},
                {"total_power", config.total_power},
                {"xi", config.xi},
                {"snr_grid_db", config.snr_grid_db},
                {"trials", config.trials},
                {"seed", config.seed},
                {"pa_mode", pa_mode_name(config.pa_mode)},
                {"fixed_fraction", config.fixed_fraction},
                {"solver", solver_to_json(config.solver)}};
}

ScenarioConfig config_from_json(const json &j)
{
    if (!j.is_object())
        throw std::invalid_argument("config: root must be an object");
    reject_unknown(j,
                   {"alice", "bobs", "eve", "path_loss_exponent", "array_gain", "total_power",
                    "xi", "snr_grid_db", "trials", "seed", "pa_mode", "fixed_fraction", "solver"},
                   "root");

    ScenarioConfig config;
    if (j.contains("alice"))
        config.alice = node_from_json(j.at("alice"), "alice");
    if (j.contains("bobs"))
    {
        if (!j.at("bobs").is_array() || j.at("bobs").empty())
            throw std::invalid_argument("config: bobs must be a non-empty array");
        config.bobs.clear();
        arma::uword b = 0;
        for (const json &node : j.at("bobs"))
            config.bobs.push_back(node_from_json(node, "bobs[" + std::to_string(b++) + "]"));
    }
    if (j.contains("eve"))
        config.eve = node_from_json(j.at("eve"), "eve");
    if (j.contains("path_loss_exponent"))
        config.path_loss_exponent = j.at("path_loss_exponent").get<double>();
    if (j.contains("array_gain"))
        config.array_gain = j.at("array_gain").get<double>();
    if (j.contains("total_power"))
        config.total_power = j.at("total_power").get<double>();
    if (j.contains("xi"))
        config.xi = j.at("xi").get<double>();
    if (j.contains("snr_grid_db"))
        config.snr_grid_db = j.at("snr_grid_db").get<std::vector<double>>();
    if (j.contains("trials"))
        config.trials = j.at("trials").get<arma::uword>();
    if (j.contains("seed"))
        config.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("pa_mode"))
        config.pa_mode = pa_mode_from_name(j.at("pa_mode").get<std::string>());
    if (j.contains("fixed_fraction"))
        config.fixed_fraction = j.at("fixed_fraction").get<double>();
    if (j.contains("solver"))
        config.solver = solver_from_json(j.at("solver"));

    validate_config(config);
    return config;
}

ScenarioConfig load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("config: cannot open \"" + path + "\"");

    json j;
    try
    {
        in >> j;
    }
    catch (const json::exception &e)
    {
        throw std::invalid_argument("config: \"" + path + "\" is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

// ------------------------------------------------------------------------- output files

json manifest_to_json(const RunManifest &manifest)
{
    return json{{"subcommand", manifest.subcommand},
                {"config", manifest.config},
                {"seed", manifest.seed},
                {"outputs", manifest.outputs},
                {"duration_seconds", manifest.duration_seconds},
                {"version", manifest.version},
                {"threads", manifest.threads},
                {"csv_columns",
                 {"sweep", "param", "snr_db", "scheme", "mean_sum_secrecy", "se_sum_secrecy",
                  "mean_min_secrecy", "se_min_secrecy", "trials"}}};
}

void write_text_atomic(const std::string &path, const std::string &content)
{
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp");

    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("write_text_atomic: cannot open \"" + tmp.string() + "\"");
        out << content;
        out.flush();
        if (!out)
            throw std::runtime_error("write_text_atomic: write to \"" + tmp.string() +
                                     "\" failed");
    }

    fs::rename(tmp, target);
}

std::string format_number(double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::string sweep_csv(const std::string &sweep_name, const std::vector<SweepRow> &rows)
{
    std::ostringstream out;
    out << "sweep,param,snr_db,scheme,mean_sum_secrecy,se_sum_secrecy,mean_min_secrecy,"
           "se_min_secrecy,trials\n";
    for (const SweepRow &row : rows)
        out << sweep_name << ',' << format_number(row.param) << ',' << format_number(row.snr_db)
            << ',' << row.scheme << ',' << format_number(row.stats.mean_sum) << ','
            << format_number(row.stats.se_sum) << ',' << format_number(row.stats.mean_min) << ','
            << format_number(row.stats.se_min) << ',' << row.stats.trials << '\n';
    return out.str();
}

std::string heatmap_csv(const std::vector<HeatCell> &cells)
{
    std::ostringstream out;
    out << "x,y,scheme,mean_sum_secrecy,se_sum_secrecy,mean_min_secrecy,se_min_secrecy,trials\n";
    for (const HeatCell &cell : cells)
        out << format_number(cell.x) << ',' << format_number(cell.y) << ',' << cell.scheme << ','
            << format_number(cell.stats.mean_sum) << ',' << format_number(cell.stats.se_sum)
            << ',' << format_number(cell.stats.mean_min) << ','
            << format_number(cell.stats.se_min) << ',' << cell.stats.trials << '\n';
    return out.str();
}

// ------------------------------------------------------------------------- validation suite

namespace
{

struct ValidationContext
{
    int failures = 0;

    void check(bool ok, const std::string &name, const std::string &detail = "")
    {
        if (ok)
        {
            std::cout << "ok      " << name << "\n";
        }
        else
        {
            ++failures;
            std::cout << "FAIL    " << name << (detail.empty() ? "" : ": " + detail) << "\n";
        }
    }
};

int run_validation()
{
    ValidationContext ctx;

    // surfaces and harmonic models
    {
        ArrayGeometry alice{20, 20, 0.25, {0.0, 0.0, 0.0}};
        ArrayGeometry bob{10, 10, 0.25, {40.0, -20.0, 0.0}};

        const SpectralModel ma = make_spectral_model(alice);
        const SpectralModel mb = make_spectral_model(bob);

        const double unitarity =
            arma::abs(ma.basis.t() * ma.basis -
                      arma::cx_mat(arma::eye(ma.n_harmonics(), ma.n_harmonics()),
                                   arma::mat(ma.n_harmonics(), ma.n_harmonics(),
                                             arma::fill::zeros)))
                .max();
        ctx.check(unitarity < 1e-10, "basis semi-unitarity",
                  "max deviation " + format_number(unitarity));

        const double mass_a = arma::sum(arma::square(ma.sigma));
        const double mass_b = arma::sum(arma::square(mb.sigma));
        ctx.check(std::abs(mass_a - 0.5) < 1e-6 && std::abs(mass_b - 0.5) < 1e-6,
                  "harmonic variance mass",
                  format_number(mass_a) + " / " + format_number(mass_b));
    }

    // channel assembly against the reduced form
    {
        ArrayGeometry small_tx{4, 4, 0.25, {0.0, 0.0, 0.0}};
        ArrayGeometry small_rx{3, 3, 0.25, {10.0, 0.0, 0.0}};
        const SpectralModel mt = make_spectral_model(small_tx);
        const SpectralModel mr = make_spectral_model(small_rx);

        Rng rng(11, 0);
        const arma::cx_mat g = draw_small_scale(rng, mr.n_harmonics(), mt.n_harmonics());
        const arma::cx_mat h = assemble_channel(mt, mr, g);
        const arma::cx_mat reduced = reduced_effective_channel(mt, mr, g);
        const double gap = arma::abs(h - reduced * mt.basis.t()).max();
        ctx.check(gap < 1e-12, "channel assembly consistency", format_number(gap));
    }

    // null-space beams on the default two-user scenario
    {
        const ScenarioConfig config;
        const SpectralModel alice = make_spectral_model(
            ArrayGeometry{config.alice.n_x, config.alice.n_y, config.alice.spacing,
                          config.alice.position});
        std::vector<SpectralModel> bobs;
        for (const NodeConfig &b : config.bobs)
            bobs.push_back(make_spectral_model(ArrayGeometry{b.n_x, b.n_y, b.spacing, b.position}));
        const SpectralModel eve = make_spectral_model(
            ArrayGeometry{config.eve.n_x, config.eve.n_y, config.eve.spacing,
                          config.eve.position});

        Rng rng(17, 0);
        std::vector<arma::cx_mat> g_bobs;
        for (const SpectralModel &mb : bobs)
            g_bobs.push_back(draw_small_scale(rng, mb.n_harmonics(), alice.n_harmonics()));
        const arma::cx_mat g_eve = draw_small_scale(rng, eve.n_harmonics(), alice.n_harmonics());

        const BeamformingSolution beams = design_beamformers(alice, bobs, eve, g_bobs, g_eve);
        const RawGains raw = compute_raw_gains(alice, bobs, eve, g_bobs, g_eve, beams,
                                               bob_path_gains(config), eve_path_gain(config));

        double leak = 0.0;
        for (arma::uword b = 0; b < 2; ++b)
            for (arma::uword k = 0; k < 2; ++k)
                if (b != k)
                    leak = std::max(leak, raw.bob_cross(b, k) / raw.bob_signal(b));
        ctx.check(leak < 1e-16, "null-space leakage", format_number(leak));
    }

    // power allocation invariants on synthetic instances
    {
        bool monotone = true, budget = true, dominates = true;
        for (std::uint64_t i = 0; i < 5; ++i)
        {
            Rng rng(23, i);
            const PaProblem problem = random_problem(rng, 2);
            const PaSolution sol = solve_sca(problem, SolverOptions{});

            for (arma::uword k = 1; k < sol.trace.n_elem; ++k)
                monotone = monotone && sol.trace(k) >= sol.trace(k - 1) - 1e-9;
            budget = budget && std::abs(arma::sum(sol.alpha) + arma::sum(sol.beta) -
                                        problem.total_power) < 1e-8;

            arma::vec uni(2, arma::fill::value(problem.total_power / 4.0));
            dominates = dominates &&
                        sol.tau >= evaluate_secrecy(problem, uni, uni).min() - 1e-6;
        }
        ctx.check(monotone, "power allocation trace monotone");
        ctx.check(budget, "power allocation budget");
        ctx.check(dominates, "power allocation dominates uniform split");
    }

    // end-to-end determinism on a miniature sweep
    {
        ScenarioConfig config;
        config.trials = 3;
        config.snr_grid_db = {0.0, 10.0};
        config.seed = 99;

        const std::string a = sweep_csv("snr", run_snr_sweep(config));
        const std::string b = sweep_csv("snr", run_snr_sweep(config));
        ctx.check(a == b, "seeded rerun byte-identical");
    }

    return ctx.failures == 0 ? exit_ok : exit_validation_failed;
}

// ------------------------------------------------------------------------- flag parsing helpers

std::vector<double> parse_number_list(const std::string &text, const std::string &flag)
{
    std::vector<double> values;

    // range form lo:hi or lo:step:hi
    if (text.find(':') != std::string::npos)
    {
        std::vector<double> parts;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ':'))
        {
            try
            {
                parts.push_back(std::stod(tok));
            }
            catch (const std::exception &)
            {
                throw std::invalid_argument(flag + ": cannot parse \"" + tok + "\" as a number");
            }
        }
        if (parts.size() != 2 && parts.size() != 3)
            throw std::invalid_argument(flag + ": range must be lo:hi or lo:step:hi");

        const double lo = parts.front();
        const double hi = parts.back();
        const double step = parts.size() == 3 ? parts[1] : 1.0;
        if (!(step > 0.0) || hi < lo)
            throw std::invalid_argument(flag + ": range must ascend with positive step");
        for (double v = lo; v <= hi + 1e-9 * step; v += step)
            values.push_back(v);
        return values;
    }

    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
    {
        if (tok.empty())
            continue;
        try
        {
            values.push_back(std::stod(tok));
        }
        catch (const std::exception &)
        {
            throw std::invalid_argument(flag + ": cannot parse \"" + tok + "\" as a number");
        }
    }
    if (values.empty())
        throw std::invalid_argument(flag + ": no values given");
    return values;
}

// common flags shared by the experiment subcommands
struct CommonFlags
{
    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::uint64_t trials = 0;
    bool trials_set = false;
    std::string pa;
    std::string snr;
    double delta = 0.0;
    bool delta_set = false;
    double xi = 0.0;
    bool xi_set = false;
};

void add_common_flags(CLI::App *cmd, CommonFlags &flags)
{
    cmd->add_option("--config", flags.config_path, "JSON scenario config; flags override it");
    cmd->add_option("--out", flags.out_dir, "output directory")->capture_default_str();
    cmd->add_option("--seed", flags.seed, "master seed")->each([&flags](const std::string &) {
        flags.seed_set = true;
    });
    cmd->add_option("--trials", flags.trials, "Monte Carlo trials per grid point")
        ->each([&flags](const std::string &) { flags.trials_set = true; });
    cmd->add_option("--pa", flags.pa, "power allocation: proposed, fixed[=frac] or both");
    cmd->add_option("--snr", flags.snr, "SNR grid in dB: list a,b,c or range lo[:step]:hi");
    cmd->add_option("--delta", flags.delta, "element spacing for every surface, wavelengths")
        ->each([&flags](const std::string &) { flags.delta_set = true; });
    cmd->add_option("--xi", flags.xi, "channel estimation error weight")
        ->each([&flags](const std::string &) { flags.xi_set = true; });
}

ScenarioConfig resolve_config(const CommonFlags &flags)
{
    ScenarioConfig config;
    if (!flags.config_path.empty())
        config = load_config(flags.config_path);

    if (flags.seed_set)
        config.seed = flags.seed;
    if (flags.trials_set)
    {
        if (flags.trials == 0)
            throw std::invalid_argument("--trials: must be positive");
        config.trials = flags.trials;
    }
    if (!flags.pa.empty())
    {
        if (flags.pa == "proposed" || flags.pa == "both")
        {
            config.pa_mode = pa_mode_from_name(flags.pa);
        }
        else if (flags.pa == "fixed" || flags.pa.rfind("fixed=", 0) == 0)
        {
            config.pa_mode = PaMode::fixed;
            if (flags.pa.size() > 6)
            {
                try
                {
                    config.fixed_fraction = std::stod(flags.pa.substr(6));
                }
                catch (const std::exception &)
                {
                    throw std::invalid_argument("--pa: cannot parse fraction in \"" + flags.pa +
                                                "\"");
                }
            }
        }
        else
        {
            throw std::invalid_argument("--pa: expected proposed, fixed[=frac] or both, got \"" +
                                        flags.pa + "\"");
        }
    }
    if (!flags.snr.empty())
        config.snr_grid_db = parse_number_list(flags.snr, "--snr");
    if (flags.delta_set)
    {
        config.alice.spacing = flags.delta;
        for (NodeConfig &bob : config.bobs)
            bob.spacing = flags.delta;
        config.eve.spacing = flags.delta;
    }
    if (flags.xi_set)
        config.xi = flags.xi;

    validate_config(config);
    return config;
}

void write_outputs(const std::string &subcommand, const ScenarioConfig &config,
                   const std::string &out_dir, const std::string &csv, double duration_seconds)
{
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    std::string stem = subcommand;
    std::replace(stem.begin(), stem.end(), '-', '_');
    const std::string csv_path = (fs::path(out_dir) / (stem + ".csv")).string();
    const std::string manifest_path =
        (fs::path(out_dir) / (stem + "_manifest.json")).string();

    write_text_atomic(csv_path, csv);

    RunManifest manifest;
    manifest.subcommand = subcommand;
    manifest.config = config_to_json(config);
    manifest.seed = config.seed;
    manifest.outputs = {csv_path};
    manifest.duration_seconds = duration_seconds;
    manifest.threads = worker_count(config.trials);
    write_text_atomic(manifest_path, manifest_to_json(manifest).dump(2) + "\n");
}

int run_oracle_compare(std::uint64_t seed, std::uint64_t instances, double step,
                       const std::string &out_dir)
{
    std::ostringstream out;
    out << "instance,sca_min_secrecy,grid_min_secrecy,ratio\n";

    arma::uword passed = 0;
    for (std::uint64_t i = 0; i < instances; ++i)
    {
        Rng rng(seed, i);
        const PaProblem problem = random_problem(rng, 2);
        const PaSolution sca = solve_sca(problem, SolverOptions{});
        const PaSolution grid = grid_search_oracle(problem, step * problem.total_power);

        if (sca.tau >= 0.95 * grid.tau)
            ++passed;
        const double ratio = grid.tau > 0.0 ? sca.tau / grid.tau : 1.0;
        out << i << ',' << format_number(sca.tau) << ',' << format_number(grid.tau) << ','
            << format_number(ratio) << '\n';
    }

    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    write_text_atomic((fs::path(out_dir) / "oracle_compare.csv").string(), out.str());

    const double frac = static_cast<double>(passed) / static_cast<double>(instances);
    std::cout << passed << "/" << instances << " instances reach 95% of the grid oracle\n";
    return frac >= 0.9 ? exit_ok : exit_validation_failed;
}

} // namespace

// ------------------------------------------------------------------------- entry point

int run_cli(int argc, char **argv)
{
    CLI::App app{"secrecy simulations for holographic MIMO surfaces"};
    app.require_subcommand(1);

    CommonFlags flags;

    CLI::App *snr_cmd = app.add_subcommand("snr-sweep", "secrecy against receiver SNR");
    CLI::App *spacing_cmd =
        app.add_subcommand("spacing-sweep", "secrecy against element spacing");
    CLI::App *csi_cmd =
        app.add_subcommand("csi-sweep", "secrecy against channel estimation error");
    CLI::App *eve_cmd =
        app.add_subcommand("eve-sweep", "secrecy against eavesdropper surface size");
    CLI::App *heat_cmd =
        app.add_subcommand("heatmap", "secrecy against eavesdropper position");
    CLI::App *oracle_cmd = app.add_subcommand(
        "oracle-compare", "solver minimum secrecy against an exhaustive grid search");
    CLI::App *validate_cmd =
        app.add_subcommand("validate", "run the module invariant suites");

    for (CLI::App *cmd : {snr_cmd, spacing_cmd, csi_cmd, eve_cmd, heat_cmd})
        add_common_flags(cmd, flags);

    std::string spacing_list = "0.125,0.25,0.5";
    spacing_cmd->add_option("--spacings", spacing_list, "spacing values to sweep, wavelengths")
        ->capture_default_str();

    std::string xi_list = "0,0.1,0.2";
    csi_cmd->add_option("--xis", xi_list, "estimation error weights to sweep")
        ->capture_default_str();

    std::string eve_list = "36,100,256";
    eve_cmd->add_option("--eve-elements", eve_list, "eavesdropper element counts (squares)")
        ->capture_default_str();

    std::string x_range = "35,65", y_range = "-25,35";
    arma::uword res_x = 8, res_y = 8;
    heat_cmd->add_option("--x-range", x_range, "eavesdropper x range, meters")
        ->capture_default_str();
    heat_cmd->add_option("--y-range", y_range, "eavesdropper y range, meters")
        ->capture_default_str();
    heat_cmd->add_option("--resolution-x", res_x, "heatmap cells along x")->capture_default_str();
    heat_cmd->add_option("--resolution-y", res_y, "heatmap cells along y")->capture_default_str();

    std::uint64_t oracle_seed = 1, oracle_instances = 50;
    double oracle_step = 0.02;
    std::string oracle_out = ".";
    oracle_cmd->add_option("--seed", oracle_seed, "instance seed")->capture_default_str();
    oracle_cmd->add_option("--trials", oracle_instances, "instance count")
        ->capture_default_str();
    oracle_cmd->add_option("--step", oracle_step, "grid step as a fraction of total power")
        ->capture_default_str();
    oracle_cmd->add_option("--out", oracle_out, "output directory")->capture_default_str();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_config_error;
    }

    try
    {
        if (validate_cmd->parsed())
            return run_validation();
        if (oracle_cmd->parsed())
            return run_oracle_compare(oracle_seed, oracle_instances, oracle_step, oracle_out);

        const ScenarioConfig config = resolve_config(flags);
        const auto t0 = std::chrono::steady_clock::now();
        std::string name;
        std::string csv;

        if (snr_cmd->parsed())
        {
            name = "snr-sweep";
            csv = sweep_csv("snr", run_snr_sweep(config));
        }
        else if (spacing_cmd->parsed())
        {
            name = "spacing-sweep";
            csv = sweep_csv("spacing", run_spacing_sweep(
                                           config, parse_number_list(spacing_list, "--spacings")));
        }
        else if (csi_cmd->parsed())
        {
            name = "csi-sweep";
            csv = sweep_csv("xi", run_csi_sweep(config, parse_number_list(xi_list, "--xis")));
        }
        else if (eve_cmd->parsed())
        {
            name = "eve-sweep";
            std::vector<arma::uword> sizes;
            for (double v : parse_number_list(eve_list, "--eve-elements"))
                sizes.push_back(static_cast<arma::uword>(std::llround(v)));
            csv = sweep_csv("eve_elements", run_eve_sweep(config, sizes));
        }
        else if (heat_cmd->parsed())
        {
            name = "heatmap";
            const std::vector<double> xr = parse_number_list(x_range, "--x-range");
            const std::vector<double> yr = parse_number_list(y_range, "--y-range");
            if (xr.size() != 2 || yr.size() != 2)
                throw std::invalid_argument("--x-range/--y-range: expected min,max");
            csv = heatmap_csv(
                run_heatmap(config, xr[0], xr[1], yr[0], yr[1], res_x, res_y));
        }

        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        write_outputs(name, config, flags.out_dir, csv, seconds);
        return exit_ok;
    }
    catch (const InfeasibleNullSpace &e)
    {
        std::cerr << "infeasible scenario: " << e.what() << "\n";
        return exit_infeasible;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "configuration error: " << e.what() << "\n";
        return exit_config_error;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation_failed;
    }
}

} // namespace holosec
