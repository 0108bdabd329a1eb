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

#ifndef holosec_beamforming_H
#define holosec_beamforming_H

#include "holosec/spectral.hpp"

#include <armadillo>
#include <stdexcept>
#include <vector>

namespace holosec
{

// The interference stack of a user spans the whole transmit harmonic space,
// leaving no null directions to steer into.
struct InfeasibleNullSpace : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// A beam or combiner came out with (numerically) zero gain.
struct DegenerateChannel : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// Channel seen from the transmit harmonic domain to the receive element
// domain: Phi_rx diag(w_rx) g diag(w_tx) with the scaled deviations
// w = sqrt(N) sigma. Multiplying a transmit harmonic vector by this gives
// the received element-domain signal, without ever forming the full
// element-to-element matrix.
arma::cx_mat reduced_effective_channel(const SpectralModel &tx, const SpectralModel &rx,
                                       const arma::cx_mat &g);

// Horizontal concatenation of the Hermitians of every other user's reduced
// channel: columns of all reduced[k]^H for k != b, ascending k. A transmit
// harmonic vector orthogonal to every column of the stack is invisible to
// all users except b.
arma::cx_mat interference_stack(const std::vector<arma::cx_mat> &reduced, arma::uword b);

struct NullSpaceBeam
{
    arma::cx_vec p;         // transmit harmonic weights, unit norm
    arma::cx_vec f;         // element-domain precoder basis * p, unit norm
    arma::uword rank = 0;   // numerical rank of the stack
    arma::uword null_dim = 0;
};

// Unit-norm transmit direction in the null space of stack^H (so the beam
// leaks nothing into the stacked users). Rank uses the cutoff
// sigma_max * max(n_rows, n_cols) * 1e-12. With an empty stack the beam is
// the first coordinate direction. When `preferred` is given (nonzero, same
// length as the harmonic space), the returned direction is the normalized
// null-space projection of it, which picks the highest-gain null direction
// deterministically instead of relying on the SVD basis order; otherwise
// the last left-singular vector is used. Either way the global phase is
// fixed by making the largest-magnitude entry real positive. Throws
// InfeasibleNullSpace if the null space is empty, DegenerateChannel if the
// preferred direction has no null-space component.
NullSpaceBeam null_space_beamformer(const arma::cx_mat &stack, const arma::cx_mat &basis_tx,
                                    const arma::cx_vec &preferred = arma::cx_vec());

// Receive-side matched filter for a transmit harmonic beam p:
//   q = normalize(Phi_rx (w_rx o (g (w_tx o p)))),
// built from the scaled deviations w = sqrt(N) sigma. Throws
// DegenerateChannel when the response norm is below 1e-14.
arma::cx_vec matched_combiner(const SpectralModel &rx, const arma::cx_mat &g,
                              const arma::vec &weights_tx, const arma::cx_vec &p);

// Beams and combiners for a full scenario, all designed from the estimated
// couplings. Per user: the interference stack of the other users' estimated
// reduced channels, a null-space beam seeded with the dominant right
// singular vector of that user's own reduced channel, and matched filters
// for the user and for the eavesdropper listening to that user's stream.
struct BeamformingSolution
{
    std::vector<arma::cx_vec> precoders;        // harmonic domain, unit norm
    std::vector<arma::cx_vec> bob_combiners;    // element domain, unit norm
    std::vector<arma::cx_vec> eve_combiners;    // element domain, unit norm
    arma::uvec stack_ranks;
    arma::uvec null_dims;
};

BeamformingSolution design_beamformers(const SpectralModel &alice,
                                       const std::vector<SpectralModel> &bobs,
                                       const SpectralModel &eve,
                                       const std::vector<arma::cx_mat> &g_bobs,
                                       const arma::cx_mat &g_eve);

} // namespace holosec

#endif
