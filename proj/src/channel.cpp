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

#include "holosec/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace holosec
{

arma::cx_mat draw_small_scale(Rng &rng, arma::uword n_rx, arma::uword n_tx)
{
    if (n_rx == 0 || n_tx == 0)
        throw std::invalid_argument("draw_small_scale: dimensions must be positive");
    return rng.cgaussian_matrix(n_rx, n_tx);
}

arma::cx_mat corrupt_csi(Rng &rng, const arma::cx_mat &g, double xi)
{
    if (!(xi >= 0.0) || xi > 1.0)
        throw std::invalid_argument("corrupt_csi: xi must be in [0, 1], got " +
                                    std::to_string(xi));

    // the error is drawn even at xi = 0 so that downstream draws land at
    // the same stream positions for every accuracy setting
    const arma::cx_mat error = rng.cgaussian_matrix(g.n_rows, g.n_cols);
    return std::sqrt(1.0 - xi * xi) * g + xi * error;
}

arma::cx_mat assemble_channel(const SpectralModel &tx, const SpectralModel &rx,
                              const arma::cx_mat &g)
{
    if (g.n_rows != rx.n_harmonics() || g.n_cols != tx.n_harmonics())
        throw std::invalid_argument("assemble_channel: coupling matrix is " +
                                    std::to_string(g.n_rows) + "x" + std::to_string(g.n_cols) +
                                    ", expected " + std::to_string(rx.n_harmonics()) + "x" +
                                    std::to_string(tx.n_harmonics()));

    arma::cx_mat weighted = g;
    weighted.each_col() %= arma::conv_to<arma::cx_vec>::from(rx.weights);
    weighted.each_row() %= arma::conv_to<arma::cx_rowvec>::from(tx.weights.t());
    return rx.basis * weighted * tx.basis.t();
}

double path_gain(double distance_m, double exponent, double gain)
{
    if (!(distance_m > 0.0))
        throw std::invalid_argument("path_gain: distance must be positive");
    return gain * std::pow(distance_m, -exponent);
}

} // namespace holosec
