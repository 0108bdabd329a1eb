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

#include "holosec/beamforming.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace holosec
{

namespace
{

// global phase so the largest-magnitude entry is real positive
void fix_phase(arma::cx_vec &v)
{
    const arma::uword idx = arma::abs(v).index_max();
    const std::complex<double> pivot = v(idx);
    const double mag = std::abs(pivot);
    if (mag > 0.0)
        v *= std::conj(pivot) / mag;
}

} // namespace

arma::cx_mat reduced_effective_channel(const SpectralModel &tx, const SpectralModel &rx,
                                       const arma::cx_mat &g)
{
    if (g.n_rows != rx.n_harmonics() || g.n_cols != tx.n_harmonics())
        throw std::invalid_argument("reduced_effective_channel: coupling matrix is " +
                                    std::to_string(g.n_rows) + "x" + std::to_string(g.n_cols) +
                                    ", expected " + std::to_string(rx.n_harmonics()) + "x" +
                                    std::to_string(tx.n_harmonics()));

    arma::cx_mat weighted = g;
    weighted.each_col() %= arma::conv_to<arma::cx_vec>::from(rx.weights);
    weighted.each_row() %= arma::conv_to<arma::cx_rowvec>::from(tx.weights.t());
    return rx.basis * weighted;
}

arma::cx_mat interference_stack(const std::vector<arma::cx_mat> &reduced, arma::uword b)
{
    if (b >= reduced.size())
        throw std::invalid_argument("interference_stack: user index out of range");

    const arma::uword n_tx = reduced[b].n_cols;
    arma::cx_mat stack(n_tx, 0);
    for (arma::uword k = 0; k < reduced.size(); ++k)
    {
        if (k == b)
            continue;
        if (reduced[k].n_cols != n_tx)
            throw std::invalid_argument("interference_stack: mismatched transmit dimensions");
        stack = arma::join_rows(stack, arma::cx_mat(reduced[k].t()));
    }
    return stack;
}

NullSpaceBeam null_space_beamformer(const arma::cx_mat &stack, const arma::cx_mat &basis_tx,
                                    const arma::cx_vec &preferred)
{
    const arma::uword n_tx = stack.n_rows;
    if (basis_tx.n_cols != n_tx)
        throw std::invalid_argument("null_space_beamformer: basis does not match stack rows");
    if (!preferred.is_empty() && preferred.n_elem != n_tx)
        throw std::invalid_argument("null_space_beamformer: preferred direction has wrong length");

    NullSpaceBeam beam;

    if (stack.n_cols == 0)
    {
        beam.rank = 0;
        beam.null_dim = n_tx;
        if (preferred.is_empty())
        {
            beam.p.zeros(n_tx);
            beam.p(0) = 1.0;
        }
        else
        {
            const double nrm = arma::norm(preferred, 2);
            if (nrm < 1e-14)
                throw DegenerateChannel("null_space_beamformer: zero preferred direction");
            beam.p = preferred / nrm;
            fix_phase(beam.p);
        }
        beam.f = basis_tx * beam.p;
        return beam;
    }

    arma::cx_mat u, v;
    arma::vec s;
    if (!arma::svd(u, s, v, stack, "std"))
        throw std::runtime_error("null_space_beamformer: svd failed");

    const double cutoff =
        s.is_empty() ? 0.0
                     : s.max() * static_cast<double>(std::max(stack.n_rows, stack.n_cols)) * 1e-12;
    beam.rank = static_cast<arma::uword>(arma::sum(s > cutoff));
    if (beam.rank >= n_tx)
        throw InfeasibleNullSpace("null_space_beamformer: interference stack spans the whole "
                                  "transmit space (rank " +
                                  std::to_string(beam.rank) + ")");
    beam.null_dim = n_tx - beam.rank;

    if (preferred.is_empty())
    {
        beam.p = u.col(n_tx - 1);
    }
    else
    {
        // project the preferred direction onto the null space; this keeps
        // the choice deterministic under reorderings of the degenerate
        // singular-vector block
        const arma::cx_mat null_basis = u.cols(beam.rank, n_tx - 1);
        arma::cx_vec projected = null_basis * (null_basis.t() * preferred);
        const double nrm = arma::norm(projected, 2);
        if (nrm < 1e-12 * std::max(1.0, arma::norm(preferred, 2)))
            throw DegenerateChannel("null_space_beamformer: preferred direction is orthogonal "
                                    "to the null space");
        beam.p = projected / nrm;
    }

    fix_phase(beam.p);
    beam.f = basis_tx * beam.p;
    return beam;
}

arma::cx_vec matched_combiner(const SpectralModel &rx, const arma::cx_mat &g,
                              const arma::vec &weights_tx, const arma::cx_vec &p)
{
    if (g.n_rows != rx.n_harmonics() || g.n_cols != weights_tx.n_elem)
        throw std::invalid_argument("matched_combiner: coupling matrix does not match models");
    if (p.n_elem != weights_tx.n_elem)
        throw std::invalid_argument("matched_combiner: beam length does not match transmitter");

    const arma::cx_vec response =
        rx.basis * (arma::conv_to<arma::cx_vec>::from(rx.weights) %
                    (g * (arma::conv_to<arma::cx_vec>::from(weights_tx) % p)));
    const double nrm = arma::norm(response, 2);
    if (nrm < 1e-14)
        throw DegenerateChannel("matched_combiner: beam produces no receive response");
    return response / nrm;
}

BeamformingSolution design_beamformers(const SpectralModel &alice,
                                       const std::vector<SpectralModel> &bobs,
                                       const SpectralModel &eve,
                                       const std::vector<arma::cx_mat> &g_bobs,
                                       const arma::cx_mat &g_eve)
{
    const arma::uword n_users = bobs.size();
    if (n_users == 0)
        throw std::invalid_argument("design_beamformers: no users");
    if (g_bobs.size() != n_users)
        throw std::invalid_argument("design_beamformers: coupling count does not match users");

    std::vector<arma::cx_mat> reduced(n_users);
    for (arma::uword k = 0; k < n_users; ++k)
        reduced[k] = reduced_effective_channel(alice, bobs[k], g_bobs[k]);

    BeamformingSolution sol;
    sol.precoders.resize(n_users);
    sol.bob_combiners.resize(n_users);
    sol.eve_combiners.resize(n_users);
    sol.stack_ranks.set_size(n_users);
    sol.null_dims.set_size(n_users);

    for (arma::uword b = 0; b < n_users; ++b)
    {
        // seed with the strongest direction of the user's own channel so
        // the null-space beam keeps as much intended gain as possible
        arma::cx_mat u_own, v_own;
        arma::vec s_own;
        if (!arma::svd_econ(u_own, s_own, v_own, reduced[b]))
            throw std::runtime_error("design_beamformers: svd failed");
        const arma::cx_vec preferred = v_own.col(0);

        const arma::cx_mat stack = interference_stack(reduced, b);
        NullSpaceBeam beam = null_space_beamformer(stack, alice.basis, preferred);

        sol.precoders[b] = beam.p;
        sol.stack_ranks(b) = beam.rank;
        sol.null_dims(b) = beam.null_dim;
        sol.bob_combiners[b] = matched_combiner(bobs[b], g_bobs[b], alice.weights, beam.p);
        sol.eve_combiners[b] = matched_combiner(eve, g_eve, alice.weights, beam.p);
    }

    return sol;
}

} // namespace holosec
