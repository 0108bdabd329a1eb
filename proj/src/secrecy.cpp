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

#include "holosec/secrecy.hpp"

#include <cmath>
#include <stdexcept>

namespace holosec
{

namespace
{

arma::cx_vec receive_response(const SpectralModel &rx, const arma::cx_mat &g,
                              const arma::vec &weights_tx, const arma::cx_vec &p)
{
    return rx.basis * (arma::conv_to<arma::cx_vec>::from(rx.weights) %
                       (g * (arma::conv_to<arma::cx_vec>::from(weights_tx) % p)));
}

double coupling_power(const arma::cx_vec &combiner, const arma::cx_vec &response)
{
    const std::complex<double> inner = arma::cdot(combiner, response);
    return std::norm(inner);
}

} // namespace

RawGains compute_raw_gains(const SpectralModel &alice, const std::vector<SpectralModel> &bobs,
                           const SpectralModel &eve, const std::vector<arma::cx_mat> &g_bobs,
                           const arma::cx_mat &g_eve, const BeamformingSolution &beams,
                           const arma::vec &zeta_bobs, double zeta_eve)
{
    const arma::uword n_users = bobs.size();
    if (g_bobs.size() != n_users || beams.precoders.size() != n_users ||
        beams.bob_combiners.size() != n_users || zeta_bobs.n_elem != n_users)
        throw std::invalid_argument("compute_raw_gains: inconsistent user counts");

    RawGains raw;
    raw.bob_signal.zeros(n_users);
    raw.bob_cross.zeros(n_users, n_users);
    raw.eve_gain.zeros(n_users, n_users);

    // user side: every combiner against every stream
    for (arma::uword b = 0; b < n_users; ++b)
    {
        for (arma::uword k = 0; k < n_users; ++k)
        {
            const arma::cx_vec resp =
                receive_response(bobs[b], g_bobs[b], alice.weights, beams.precoders[k]);
            const double gain = coupling_power(beams.bob_combiners[b], resp) * zeta_bobs(b);
            if (k == b)
                raw.bob_signal(b) = gain;
            else
                raw.bob_cross(b, k) = gain;
        }
    }

    // eavesdropper side: the combiner for stream b is matched to the
    // couplings passed in, not to the ones the beams were designed from
    std::vector<arma::cx_vec> eve_responses(n_users);
    for (arma::uword k = 0; k < n_users; ++k)
        eve_responses[k] = receive_response(eve, g_eve, alice.weights, beams.precoders[k]);

    for (arma::uword b = 0; b < n_users; ++b)
    {
        const double nrm = arma::norm(eve_responses[b], 2);
        if (nrm < 1e-14)
            throw DegenerateChannel("compute_raw_gains: eavesdropper response vanished");
        const arma::cx_vec q = eve_responses[b] / nrm;
        for (arma::uword k = 0; k < n_users; ++k)
            raw.eve_gain(b, k) = coupling_power(q, eve_responses[k]) * zeta_eve;
    }

    return raw;
}

LinkGains with_noise(const RawGains &raw, double noise)
{
    if (!(noise > 0.0))
        throw std::invalid_argument("with_noise: noise power must be positive");

    LinkGains gains;
    gains.bob_signal = raw.bob_signal / noise;
    gains.bob_cross = raw.bob_cross;
    gains.eve_gain = raw.eve_gain;
    gains.noise = noise;
    return gains;
}

double bob_sinr(const LinkGains &gains, const arma::vec &alpha, const arma::vec &beta,
                arma::uword b)
{
    const arma::uword n_users = gains.bob_signal.n_elem;
    double interference = 0.0;
    for (arma::uword k = 0; k < n_users; ++k)
        if (k != b)
            interference += gains.bob_cross(b, k) * (alpha(k) + beta(k));
    return gains.bob_signal(b) * alpha(b) * gains.noise / (interference + gains.noise);
}

double eve_sinr(const LinkGains &gains, const arma::vec &alpha, const arma::vec &beta,
                arma::uword b)
{
    const arma::uword n_users = gains.bob_signal.n_elem;
    double denom = gains.eve_gain(b, b) * beta(b) + gains.noise;
    for (arma::uword k = 0; k < n_users; ++k)
        if (k != b)
            denom += gains.eve_gain(b, k) * (alpha(k) + beta(k));
    return gains.eve_gain(b, b) * alpha(b) / denom;
}

SecrecyReport secrecy_report(const LinkGains &gains, const arma::vec &alpha,
                             const arma::vec &beta)
{
    const arma::uword n_users = gains.bob_signal.n_elem;
    if (alpha.n_elem != n_users || beta.n_elem != n_users)
        throw std::invalid_argument("secrecy_report: power split does not match user count");

    SecrecyReport report;
    report.bob_rate.set_size(n_users);
    report.eve_rate.set_size(n_users);
    report.secrecy.set_size(n_users);

    for (arma::uword b = 0; b < n_users; ++b)
    {
        report.bob_rate(b) = std::log2(1.0 + bob_sinr(gains, alpha, beta, b));
        report.eve_rate(b) = std::log2(1.0 + eve_sinr(gains, alpha, beta, b));
        report.secrecy(b) = std::max(report.bob_rate(b) - report.eve_rate(b), 0.0);
    }

    report.sum_secrecy = arma::sum(report.secrecy);
    report.min_secrecy = report.secrecy.min();
    return report;
}

} // namespace holosec
