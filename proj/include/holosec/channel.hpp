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

#ifndef holosec_channel_H
#define holosec_channel_H

#include "holosec/rng.hpp"
#include "holosec/spectral.hpp"

#include <armadillo>

namespace holosec
{

// Small-scale coupling matrix between two harmonic sets, iid CN(0, 1),
// n_rx x n_tx, drawn column-major so the stream layout is deterministic.
arma::cx_mat draw_small_scale(Rng &rng, arma::uword n_rx, arma::uword n_tx);

// Gauss-Markov estimate of a coupling matrix:
//   g_hat = sqrt(1 - xi^2) g + xi e,  e iid CN(0, 1).
// xi in [0, 1]; xi = 0 still consumes the error draw so that streams stay
// aligned across accuracy settings. Throws std::invalid_argument on bad xi.
arma::cx_mat corrupt_csi(Rng &rng, const arma::cx_mat &g, double xi);

// Element-domain channel Phi_rx diag(w_rx) g diag(w_tx) Phi_tx^H with the
// scaled deviations w = sqrt(N) sigma, so the average channel energy is
// N_rx N_tx / 4. Shape n_rx_elements x n_tx_elements. Throws
// std::invalid_argument if g does not match the harmonic counts.
arma::cx_mat assemble_channel(const SpectralModel &tx, const SpectralModel &rx,
                              const arma::cx_mat &g);

// One drawn link: true coupling, designer-side estimate, large-scale gain.
struct ChannelRealization
{
    arma::cx_mat g;      // true small-scale coupling
    arma::cx_mat g_hat;  // estimate used for beamformer and power design
    double zeta = 1.0;   // large-scale power gain
};

// Distance power law zeta = gain * d^(-exponent), d in meters.
double path_gain(double distance_m, double exponent, double gain);

} // namespace holosec

#endif
