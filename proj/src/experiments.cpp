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

#include "holosec/experiments.hpp"

#include "holosec/beamforming.hpp"

#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace holosec
{

namespace
{

ArrayGeometry node_geometry(const NodeConfig &node)
{
    ArrayGeometry geom;
    geom.n_x = node.n_x;
    geom.n_y = node.n_y;
    geom.spacing = node.spacing;
    geom.reference = node.position;
    return geom;
}

double snr_to_noise(double snr_db)
{
    return std::pow(10.0, -snr_db / 10.0);
}

void run_parallel(std::size_t jobs, const std::function<void(std::size_t)> &work)
{
    const unsigned workers = worker_count(jobs);
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < jobs; ++i)
            work(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto body = [&]()
    {
        while (true)
        {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs)
                return;
            try
            {
                work(i);
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(body);
    for (std::thread &th : pool)
        th.join();

    if (failure)
        std::rethrow_exception(failure);
}

} // namespace

unsigned worker_count(std::size_t jobs)
{
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0)
        workers = 1;

    if (const char *env = std::getenv("HOLO_THREADS"))
    {
        char *end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed >= 1)
            workers = std::min<unsigned>(workers, static_cast<unsigned>(parsed));
    }

    if (jobs < workers)
        workers = static_cast<unsigned>(jobs);
    return std::max(1u, workers);
}

void validate_config(const ScenarioConfig &config)
{
    validate_geometry(node_geometry(config.alice));
    if (config.bobs.empty())
        throw std::invalid_argument("ScenarioConfig: at least one user surface is required");
    for (const NodeConfig &bob : config.bobs)
        validate_geometry(node_geometry(bob));
    validate_geometry(node_geometry(config.eve));

    for (std::size_t b = 0; b < config.bobs.size(); ++b)
        if (arma::norm(config.bobs[b].position - config.alice.position, 2) <= 0.0)
            throw std::invalid_argument("ScenarioConfig: user " + std::to_string(b) +
                                        " sits on the transmitter");
    if (arma::norm(config.eve.position - config.alice.position, 2) <= 0.0)
        throw std::invalid_argument("ScenarioConfig: eavesdropper sits on the transmitter");

    if (!(config.path_loss_exponent > 0.0))
        throw std::invalid_argument("ScenarioConfig: path_loss_exponent must be positive");
    if (!(config.array_gain > 0.0))
        throw std::invalid_argument("ScenarioConfig: array_gain must be positive");
    if (!(config.total_power > 0.0))
        throw std::invalid_argument("ScenarioConfig: total_power must be positive");
    if (!(config.xi >= 0.0) || config.xi > 1.0)
        throw std::invalid_argument("ScenarioConfig: xi must be in [0, 1]");
    if (config.snr_grid_db.empty())
        throw std::invalid_argument("ScenarioConfig: snr_grid_db must not be empty");
    for (double snr : config.snr_grid_db)
        if (!std::isfinite(snr))
            throw std::invalid_argument("ScenarioConfig: snr_grid_db must be finite");
    if (config.trials == 0)
        throw std::invalid_argument("ScenarioConfig: trials must be positive");
    if (!(config.fixed_fraction >= 0.0) || config.fixed_fraction > 1.0)
        throw std::invalid_argument("ScenarioConfig: fixed_fraction must be in [0, 1]");
}

arma::vec bob_path_gains(const ScenarioConfig &config)
{
    arma::vec zeta(config.bobs.size());
    for (std::size_t b = 0; b < config.bobs.size(); ++b)
    {
        const double d = arma::norm(config.bobs[b].position - config.alice.position, 2);
        zeta(b) = path_gain(d, config.path_loss_exponent, config.array_gain);
    }
    return zeta;
}

double eve_path_gain(const ScenarioConfig &config)
{
    const double d = arma::norm(config.eve.position - config.alice.position, 2);
    return path_gain(d, config.path_loss_exponent, config.array_gain);
}

TrialResult run_trial(const ScenarioConfig &config, std::uint64_t trial_index)
{
    validate_config(config);

    const SpectralModel alice = make_spectral_model(node_geometry(config.alice));
    std::vector<SpectralModel> bobs;
    bobs.reserve(config.bobs.size());
    for (const NodeConfig &node : config.bobs)
        bobs.push_back(make_spectral_model(node_geometry(node)));
    const SpectralModel eve = make_spectral_model(node_geometry(config.eve));

    const arma::vec zeta_bobs = bob_path_gains(config);
    const double zeta_eve = eve_path_gain(config);

    Rng rng(config.seed, trial_index);

    std::vector<arma::cx_mat> g_bobs(bobs.size()), g_hat_bobs(bobs.size());
    for (std::size_t b = 0; b < bobs.size(); ++b)
    {
        g_bobs[b] = draw_small_scale(rng, bobs[b].n_harmonics(), alice.n_harmonics());
        g_hat_bobs[b] = corrupt_csi(rng, g_bobs[b], config.xi);
    }
    const arma::cx_mat g_eve = draw_small_scale(rng, eve.n_harmonics(), alice.n_harmonics());
    const arma::cx_mat g_hat_eve = corrupt_csi(rng, g_eve, config.xi);

    const BeamformingSolution beams =
        design_beamformers(alice, bobs, eve, g_hat_bobs, g_hat_eve);

    const RawGains designer =
        compute_raw_gains(alice, bobs, eve, g_hat_bobs, g_hat_eve, beams, zeta_bobs, zeta_eve);
    const RawGains realized =
        compute_raw_gains(alice, bobs, eve, g_bobs, g_eve, beams, zeta_bobs, zeta_eve);

    const bool want_proposed =
        config.pa_mode == PaMode::proposed || config.pa_mode == PaMode::both;
    const bool want_fixed = config.pa_mode == PaMode::fixed || config.pa_mode == PaMode::both;

    TrialResult result;
    result.stack_ranks = beams.stack_ranks;
    result.null_dims = beams.null_dims;

    for (double snr_db : config.snr_grid_db)
    {
        const double noise = snr_to_noise(snr_db);
        const LinkGains design_gains = with_noise(designer, noise);
        const LinkGains true_gains = with_noise(realized, noise);
        const PaProblem problem = extract_pa_problem(design_gains, config.total_power);

        if (want_proposed)
        {
            const PaSolution sol = solve_sca(problem, config.solver);
            result.proposed.push_back(secrecy_report(true_gains, sol.alpha, sol.beta));
        }
        if (want_fixed)
        {
            const PaSolution sol = fixed_pa(problem, config.fixed_fraction);
            result.fixed.push_back(secrecy_report(true_gains, sol.alpha, sol.beta));
        }
    }

    return result;
}

AggregateStats aggregate_reports(const std::vector<SecrecyReport> &reports)
{
    AggregateStats stats;
    stats.trials = reports.size();
    if (reports.empty())
        return stats;

    arma::vec sums(reports.size()), mins(reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i)
    {
        sums(i) = reports[i].sum_secrecy;
        mins(i) = reports[i].min_secrecy;
    }

    stats.mean_sum = arma::mean(sums);
    stats.mean_min = arma::mean(mins);
    if (reports.size() > 1)
    {
        const double root = std::sqrt(static_cast<double>(reports.size()));
        stats.se_sum = arma::stddev(sums) / root;
        stats.se_min = arma::stddev(mins) / root;
    }
    return stats;
}

namespace
{

// Runs all trials of one configuration and reduces per SNR point in trial
// order. `param` labels the rows (equal to the SNR for plain SNR sweeps).
std::vector<SweepRow> sweep_point(const ScenarioConfig &config, double param)
{
    validate_config(config);

    std::vector<TrialResult> trials(config.trials);
    run_parallel(config.trials,
                 [&](std::size_t i) { trials[i] = run_trial(config, i); });

    const bool want_proposed =
        config.pa_mode == PaMode::proposed || config.pa_mode == PaMode::both;
    const bool want_fixed = config.pa_mode == PaMode::fixed || config.pa_mode == PaMode::both;

    std::vector<SweepRow> rows;
    for (std::size_t s = 0; s < config.snr_grid_db.size(); ++s)
    {
        if (want_proposed)
        {
            std::vector<SecrecyReport> reports;
            reports.reserve(trials.size());
            for (const TrialResult &tr : trials)
                reports.push_back(tr.proposed.at(s));
            rows.push_back({param, config.snr_grid_db[s], "proposed", aggregate_reports(reports)});
        }
        if (want_fixed)
        {
            std::vector<SecrecyReport> reports;
            reports.reserve(trials.size());
            for (const TrialResult &tr : trials)
                reports.push_back(tr.fixed.at(s));
            rows.push_back({param, config.snr_grid_db[s], "fixed", aggregate_reports(reports)});
        }
    }
    return rows;
}

} // namespace

std::vector<SweepRow> run_snr_sweep(const ScenarioConfig &config)
{
    std::vector<SweepRow> rows;
    for (SweepRow &row : sweep_point(config, 0.0))
    {
        row.param = row.snr_db;
        rows.push_back(row);
    }
    return rows;
}

std::vector<SweepRow> run_spacing_sweep(const ScenarioConfig &config,
                                        const std::vector<double> &spacings)
{
    if (spacings.empty())
        throw std::invalid_argument("run_spacing_sweep: no spacing values");

    std::vector<SweepRow> rows;
    for (double delta : spacings)
    {
        ScenarioConfig point = config;
        point.alice.spacing = delta;
        for (NodeConfig &bob : point.bobs)
            bob.spacing = delta;
        point.eve.spacing = delta;
        const std::vector<SweepRow> part = sweep_point(point, delta);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

std::vector<SweepRow> run_csi_sweep(const ScenarioConfig &config, const std::vector<double> &xis)
{
    if (xis.empty())
        throw std::invalid_argument("run_csi_sweep: no xi values");

    std::vector<SweepRow> rows;
    for (double xi : xis)
    {
        ScenarioConfig point = config;
        point.xi = xi;
        const std::vector<SweepRow> part = sweep_point(point, xi);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

std::vector<SweepRow> run_eve_sweep(const ScenarioConfig &config,
                                    const std::vector<arma::uword> &eve_elements)
{
    if (eve_elements.empty())
        throw std::invalid_argument("run_eve_sweep: no eavesdropper sizes");

    std::vector<SweepRow> rows;
    for (arma::uword n_elements : eve_elements)
    {
        const auto side = static_cast<arma::uword>(std::llround(std::sqrt(
            static_cast<double>(n_elements))));
        if (side * side != n_elements || side == 0)
            throw std::invalid_argument("run_eve_sweep: eavesdropper element count " +
                                        std::to_string(n_elements) +
                                        " is not a positive perfect square");

        ScenarioConfig point = config;
        point.eve.n_x = side;
        point.eve.n_y = side;
        const std::vector<SweepRow> part =
            sweep_point(point, static_cast<double>(n_elements));
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

std::vector<HeatCell> run_heatmap(const ScenarioConfig &config, double x_min, double x_max,
                                  double y_min, double y_max, arma::uword resolution_x,
                                  arma::uword resolution_y)
{
    if (!(x_max > x_min) || !(y_max > y_min))
        throw std::invalid_argument("run_heatmap: empty spatial range");
    if (resolution_x == 0 || resolution_y == 0)
        throw std::invalid_argument("run_heatmap: resolution must be positive");

    const double dx = (x_max - x_min) / static_cast<double>(resolution_x);
    const double dy = (y_max - y_min) / static_cast<double>(resolution_y);

    std::vector<HeatCell> cells;
    for (arma::uword ix = 0; ix < resolution_x; ++ix)
        for (arma::uword iy = 0; iy < resolution_y; ++iy)
        {
            const double x = x_min + (static_cast<double>(ix) + 0.5) * dx;
            const double y = y_min + (static_cast<double>(iy) + 0.5) * dy;

            ScenarioConfig point = config;
            point.eve.position = {x, y, 0.0};
            point.snr_grid_db = {config.snr_grid_db.front()};

            for (const SweepRow &row : sweep_point(point, 0.0))
                cells.push_back({x, y, row.scheme, row.stats});
        }
    return cells;
}

} // namespace holosec
