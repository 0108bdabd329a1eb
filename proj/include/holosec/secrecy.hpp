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

#ifndef holosec_secrecy_H
#define holosec_secrecy_H

#include "holosec/beamforming.hpp"
#include "holosec/spectral.hpp"

#include <armadillo>
#include <vector>

namespace holosec
{

// Squared beam responses after the combiners, before any noise scaling.
// bob_signal[b]   = |q_b^H H_b f_b|^2 zeta_b            (intended link)
// bob_cross(b,k)  = |q_b^H H_b f_k|^2 zeta_b, k != b    (residual leakage)
// eve_gain(b,k)   = |q_Eb^H H_E f_k|^2 zeta_E           (tap on stream b)
// The eavesdropper's combiner for stream b is matched to the coupling
// passed here, so calling this with true couplings models a fully informed
// eavesdropper while calling it with estimates gives the designer's view.
struct RawGains
{
    arma::vec bob_signal;
    arma::mat bob_cross;
    arma::mat eve_gain;
};

RawGains compute_raw_gains(const SpectralModel &alice, const std::vector<SpectralModel> &bobs,
                           const SpectralModel &eve, const std::vector<arma::cx_mat> &g_bobs,
                           const arma::cx_mat &g_eve, const BeamformingSolution &beams,
                           const arma::vec &zeta_bobs, double zeta_eve);

// Raw gains normalized to a noise level. bob_signal becomes the per-unit-
// power SNR of the intended link; everything else stays a plain power gain.
struct LinkGains
{
    arma::vec bob_signal;   // a_b = raw / noise
    arma::mat bob_cross;
    arma::mat eve_gain;
    double noise = 1.0;     // receiver noise power sigma_z^2
};

LinkGains with_noise(const RawGains &raw, double noise);

// Rates and secrecy for a power split (alpha = data, beta = noise shares).
// Users cancel their own artificial noise before decoding; residual cross
// terms carry both the data and noise power of the other streams. The
// eavesdropper taps stream b with its matched combiner, jammed by stream
// b's own artificial noise and everything sent for the other users.
struct SecrecyReport
{
    arma::vec bob_rate;      // log2(1 + sinr), per user
    arma::vec eve_rate;      // per tapped stream
    arma::vec secrecy;       // max(bob - eve, 0)
    double sum_secrecy = 0.0;
    double min_secrecy = 0.0;
};

double bob_sinr(const LinkGains &gains, const arma::vec &alpha, const arma::vec &beta,
                arma::uword b);
double eve_sinr(const LinkGains &gains, const arma::vec &alpha, const arma::vec &beta,
                arma::uword b);
SecrecyReport secrecy_report(const LinkGains &gains, const arma::vec &alpha,
                             const arma::vec &beta);

} // namespace holosec

#endif
