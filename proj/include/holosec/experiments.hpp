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

#ifndef holosec_experiments_H
#define holosec_experiments_H

#include "holosec/channel.hpp"
#include "holosec/power_allocation.hpp"
#include "holosec/secrecy.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace holosec
{

struct NodeConfig
{
    arma::uword n_x = 10;
    arma::uword n_y = 10;
    double spacing = 0.25;      // wavelengths
    arma::vec3 position = {};   // meters
};

enum class PaMode
{
    proposed,
    fixed,
    both
};

// Full description of one Monte Carlo experiment. Defaults reproduce the
// two-user reference scenario: a 20x20 quarter-wavelength transmit surface
// at the origin, 10x10 user surfaces at (40, -20) and (60, 30) meters, a
// 10x10 eavesdropper surface at (60, 25) meters.
struct ScenarioConfig
{
    NodeConfig alice{20, 20, 0.25, {0.0, 0.0, 0.0}};
    std::vector<NodeConfig> bobs{
        NodeConfig{10, 10, 0.25, {40.0, -20.0, 0.0}},
        NodeConfig{10, 10, 0.25, {60.0, 30.0, 0.0}},
    };
    NodeConfig eve{10, 10, 0.25, {60.0, 25.0, 0.0}};

    double path_loss_exponent = 2.7;
    double array_gain = 1000.0;       // large-scale gain at 1 m
    double total_power = 2.0;
    double xi = 0.0;                  // channel estimation error weight
    std::vector<double> snr_grid_db{-10.0, -5.0, 0.0, 5.0, 10.0, 15.0, 20.0};
    arma::uword trials = 1000;
    std::uint64_t seed = 1;
    PaMode pa_mode = PaMode::both;
    double fixed_fraction = 0.5;      // data share of the static benchmark
    SolverOptions solver{};
};

void validate_config(const ScenarioConfig &config);

// Large-scale gains implied by the node positions.
arma::vec bob_path_gains(const ScenarioConfig &config);
double eve_path_gain(const ScenarioConfig &config);

// One Monte Carlo trial. The random stream is fully determined by
// (config.seed, trial_index): each surface contributes its coupling draw
// followed by its estimation-error draw, users ascending, the eavesdropper
// last. Equal trial indices therefore see equal channels across SNR
// points, power schemes, estimation accuracies, eavesdropper positions and
// (for the users) eavesdropper surface sizes. Beams are designed once from
// the estimates; the noise grid only rescales the already-computed beam
// gains. Realized secrecy uses the true couplings and an eavesdropper
// matched to them.
struct TrialResult
{
    std::vector<SecrecyReport> proposed;   // one report per SNR grid point
    std::vector<SecrecyReport> fixed;
    arma::uvec stack_ranks;
    arma::uvec null_dims;
};

TrialResult run_trial(const ScenarioConfig &config, std::uint64_t trial_index);

struct AggregateStats
{
    double mean_sum = 0.0;
    double se_sum = 0.0;      // standard error of the mean
    double mean_min = 0.0;
    double se_min = 0.0;
    arma::uword trials = 0;
};

// Mean and standard error over per-trial sum and minimum secrecy.
AggregateStats aggregate_reports(const std::vector<SecrecyReport> &reports);

// One output row: a sweep parameter value, an SNR point and a scheme.
struct SweepRow
{
    double param = 0.0;
    double snr_db = 0.0;
    std::string scheme;       // "proposed" or "fixed"
    AggregateStats stats;
};

// Trials run across a worker pool (capped by the HOLO_THREADS environment
// variable); results are reduced in trial order, so the output does not
// depend on the worker count.
std::vector<SweepRow> run_snr_sweep(const ScenarioConfig &config);
std::vector<SweepRow> run_spacing_sweep(const ScenarioConfig &config,
                                        const std::vector<double> &spacings);
std::vector<SweepRow> run_csi_sweep(const ScenarioConfig &config,
                                    const std::vector<double> &xis);
std::vector<SweepRow> run_eve_sweep(const ScenarioConfig &config,
                                    const std::vector<arma::uword> &eve_elements);

// Secrecy as a function of eavesdropper position over a rectangular grid,
// evaluated at the first SNR grid point. resolution_x / _y are cell counts.
struct HeatCell
{
    double x = 0.0;
    double y = 0.0;
    std::string scheme;
    AggregateStats stats;
};

std::vector<HeatCell> run_heatmap(const ScenarioConfig &config, double x_min, double x_max,
                                  double y_min, double y_max, arma::uword resolution_x,
                                  arma::uword resolution_y);

// Worker count used for a job list of the given size.
unsigned worker_count(std::size_t jobs);

} // namespace holosec

#endif
