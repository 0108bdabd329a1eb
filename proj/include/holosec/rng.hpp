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

#ifndef holosec_rng_H
#define holosec_rng_H

#include <armadillo>
#include <cstdint>
#include <random>

namespace holosec
{

// Counter-seeded random stream. Each (master seed, trial index) pair gives
// an independent, platform-stable stream: seeding goes through a splitmix64
// mix so that nearby trial indices do not produce correlated mt19937 states,
// and the Gaussian path uses an explicit Box-Muller transform instead of
// std::normal_distribution, whose output sequence is not pinned by the
// standard. This is what makes equal-seed runs byte-identical everywhere.
class Rng
{
  public:
    explicit Rng(std::uint64_t master_seed, std::uint64_t trial_index = 0);

    // Uniform on [0, 1).
    double uniform();

    // Uniform on [lo, hi).
    double uniform(double lo, double hi);

    // Standard real Gaussian, Box-Muller pairs consumed one at a time.
    double gaussian();

    // Circularly symmetric complex Gaussian, unit variance:
    // (x + iy) / sqrt(2) with x, y standard real Gaussians.
    std::complex<double> cgaussian();

    // Matrix of iid unit-variance complex Gaussians, filled column-major.
    arma::cx_mat cgaussian_matrix(arma::uword n_rows, arma::uword n_cols);

    std::uint64_t raw();

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// splitmix64 step, exposed for seed-derivation tests.
std::uint64_t splitmix64(std::uint64_t &state);

} // namespace holosec

#endif
