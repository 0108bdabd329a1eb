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

#ifndef holosec_power_allocation_H
#define holosec_power_allocation_H

#include "holosec/rng.hpp"
#include "holosec/secrecy.hpp"

#include <armadillo>
#include <stdexcept>

namespace holosec
{

// Scalar coefficients of the max-min secrecy power split. alpha / beta are
// data / artificial-noise powers per user, constrained by
// sum(alpha + beta) = total_power.
struct PaProblem
{
    arma::vec a;          // intended-link SNR per unit power
    arma::mat cross;      // residual inter-user power gains, zero diagonal
    arma::mat e;          // eavesdropper power gains, (tap, stream)
    double noise = 1.0;
    double total_power = 1.0;

    arma::uword n_users() const { return a.n_elem; }
};

PaProblem extract_pa_problem(const LinkGains &gains, double total_power);

// Designer-view rates and secrecy for a candidate split.
arma::vec evaluate_rates(const PaProblem &problem, const arma::vec &alpha,
                         const arma::vec &beta);
arma::vec evaluate_eve_rates(const PaProblem &problem, const arma::vec &alpha,
                             const arma::vec &beta);
arma::vec evaluate_secrecy(const PaProblem &problem, const arma::vec &alpha,
                           const arma::vec &beta);

struct SolverOptions
{
    double barrier_t0 = 1.0;
    double barrier_mu = 10.0;
    double barrier_tol = 1e-8;        // duality gap bound m / t
    double newton_tol = 1e-9;         // half squared Newton decrement
    arma::uword newton_max = 80;
    double backtrack_slope = 0.01;
    double backtrack_shrink = 0.5;
    arma::uword sca_max_iterations = 50;
    double sca_tol = 1e-4;            // minimum tau improvement to continue
    double alpha_floor = 1e-12;       // times total_power
};

// Inner-iteration linearization state: anchors of the exponential-cone
// surrogates, one entry per user with a live eavesdropper tap (e_bb > 0).
struct Linearization
{
    arma::uvec active;    // user indices with e(b, b) > 0
    arma::vec x_bar;      // anchor for ln(alpha_b)
    arma::vec c_bar;      // anchor for the eavesdropper rate bound
};

// One accepted point of the convexified subproblem.
struct PaIterate
{
    arma::vec alpha;
    arma::vec beta;
    arma::vec c;          // eavesdropper rate bounds, active users
    arma::vec i_e;        // eavesdropper denominator surrogates
    arma::vec x;          // ln alpha surrogates
    arma::vec y;          // ln of eavesdropper denominator
    arma::vec z;          // ln of eavesdropper numerator
    double tau = 0.0;
    arma::uword newton_iterations = 0;
    double kkt_residual = 0.0;
};

// Interior-point (log-barrier, damped Newton with equality-constrained
// steps) solve of one convexified subproblem from a strictly feasible
// start. Returned iterates satisfy every subproblem constraint to 1e-7
// and the power budget to 1e-8.
PaIterate solve_inner_convex(const PaProblem &problem, const Linearization &lin,
                             const PaIterate &start, const SolverOptions &options);

// The successive approximation stalled in a way that lost objective value.
struct NonMonotone : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct PaSolution
{
    arma::vec alpha;
    arma::vec beta;
    double tau = 0.0;         // designer-view minimum secrecy
    arma::vec secrecy;        // designer-view per-user secrecy
    arma::vec trace;          // accepted tau after each outer iteration
    arma::uword iterations = 0;
    bool converged = false;
};

// Successive convex approximation for the max-min secrecy split. Starts
// from the uniform split, re-anchors the surrogates at each accepted
// iterate, and keeps only improving steps, so the reported trace is
// nondecreasing and the final split never falls below the uniform start
// (to 1e-6). A tau drop beyond 1e-6 raises NonMonotone. Power shares below
// alpha_floor * total_power are clipped to zero and the split renormalized
// to the exact budget before reporting.
PaSolution solve_sca(const PaProblem &problem, const SolverOptions &options = {});

// Exhaustive max-min search over the simplex with the given power step,
// for cross-checking the solver on small instances. Supports up to three
// users.
PaSolution grid_search_oracle(const PaProblem &problem, double step);

// Static benchmark split: every user gets total_power / n_users, a fixed
// fraction of it on data and the rest on artificial noise.
PaSolution fixed_pa(const PaProblem &problem, double data_fraction);

// Synthetic instance for solver stress tests and the solver-vs-oracle
// comparison: intended and eavesdropper gains log-uniform in [1e-2, 1e2],
// no residual cross gains, unit noise.
PaProblem random_problem(Rng &rng, arma::uword n_users, double total_power = 2.0);

} // namespace holosec

#endif
