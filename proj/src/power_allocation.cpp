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
//
// Max-min secrecy power allocation. The nonconvex problem is attacked by
// successive convex approximation: the eavesdropper rate is routed through
// auxiliary variables (C, I, X, Y, Z) whose only nonconvex couplings are
// two scalar exponentials, replaced by first-order surrogates anchored at
// the previous iterate. Each convex subproblem is solved with a log-barrier
// interior-point method; the systems are tiny (7 B + 1 variables), so a
// dense equality-constrained Newton step is used throughout.

#include "holosec/power_allocation.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace holosec
{

namespace
{

constexpr double ln2 = 0.69314718055994530942;

void validate_problem(const PaProblem &problem)
{
    const arma::uword n = problem.n_users();
    if (n == 0)
        throw std::invalid_argument("PaProblem: no users");
    if (problem.cross.n_rows != n || problem.cross.n_cols != n || problem.e.n_rows != n ||
        problem.e.n_cols != n)
        throw std::invalid_argument("PaProblem: gain matrices must be n_users x n_users");
    if (!problem.a.is_finite() || !problem.cross.is_finite() || !problem.e.is_finite())
        throw std::invalid_argument("PaProblem: gains must be finite");
    if (problem.a.min() < 0.0 || problem.cross.min() < 0.0 || problem.e.min() < 0.0)
        throw std::invalid_argument("PaProblem: gains must be nonnegative");
    if (!(problem.noise > 0.0))
        throw std::invalid_argument("PaProblem: noise must be positive");
    if (!(problem.total_power > 0.0))
        throw std::invalid_argument("PaProblem: total_power must be positive");
}

// Eavesdropper SINR denominator for stream b.
double eve_denominator(const PaProblem &problem, const arma::vec &alpha, const arma::vec &beta,
                       arma::uword b)
{
    double d = problem.noise;
    for (arma::uword k = 0; k < problem.n_users(); ++k)
    {
        if (k != b)
            d += problem.e(b, k) * alpha(k);
        d += problem.e(b, k) * beta(k);
    }
    return d;
}

// Variable layout of one subproblem: alpha, beta for every user, then the
// five auxiliaries for users with a live eavesdropper tap, then tau.
struct Layout
{
    arma::uword n = 0;
    std::vector<arma::uword> active;        // user index per active slot
    std::vector<long long> slot;            // active slot per user, -1 if none

    arma::uword n_active() const { return active.size(); }
    arma::uword nv() const { return 2 * n + 5 * n_active() + 1; }
    arma::uword ia(arma::uword b) const { return b; }
    arma::uword ib(arma::uword b) const { return n + b; }
    arma::uword ic(arma::uword j) const { return 2 * n + j; }
    arma::uword ii(arma::uword j) const { return 2 * n + n_active() + j; }
    arma::uword ix(arma::uword j) const { return 2 * n + 2 * n_active() + j; }
    arma::uword iy(arma::uword j) const { return 2 * n + 3 * n_active() + j; }
    arma::uword iz(arma::uword j) const { return 2 * n + 4 * n_active() + j; }
    arma::uword itau() const { return nv() - 1; }
};

Layout make_layout(const PaProblem &problem)
{
    Layout lay;
    lay.n = problem.n_users();
    lay.slot.assign(lay.n, -1);
    for (arma::uword b = 0; b < lay.n; ++b)
        if (problem.e(b, b) > 0.0)
        {
            lay.slot[b] = static_cast<long long>(lay.active.size());
            lay.active.push_back(b);
        }
    return lay;
}

arma::vec pack(const Layout &lay, const PaIterate &it)
{
    arma::vec v(lay.nv(), arma::fill::zeros);
    for (arma::uword b = 0; b < lay.n; ++b)
    {
        v(lay.ia(b)) = it.alpha(b);
        v(lay.ib(b)) = it.beta(b);
    }
    for (arma::uword j = 0; j < lay.n_active(); ++j)
    {
        v(lay.ic(j)) = it.c(j);
        v(lay.ii(j)) = it.i_e(j);
        v(lay.ix(j)) = it.x(j);
        v(lay.iy(j)) = it.y(j);
        v(lay.iz(j)) = it.z(j);
    }
    v(lay.itau()) = it.tau;
    return v;
}

PaIterate unpack(const Layout &lay, const arma::vec &v)
{
    PaIterate it;
    it.alpha.set_size(lay.n);
    it.beta.set_size(lay.n);
    it.c.set_size(lay.n_active());
    it.i_e.set_size(lay.n_active());
    it.x.set_size(lay.n_active());
    it.y.set_size(lay.n_active());
    it.z.set_size(lay.n_active());
    for (arma::uword b = 0; b < lay.n; ++b)
    {
        it.alpha(b) = v(lay.ia(b));
        it.beta(b) = v(lay.ib(b));
    }
    for (arma::uword j = 0; j < lay.n_active(); ++j)
    {
        it.c(j) = v(lay.ic(j));
        it.i_e(j) = v(lay.ii(j));
        it.x(j) = v(lay.ix(j));
        it.y(j) = v(lay.iy(j));
        it.z(j) = v(lay.iz(j));
    }
    it.tau = v(lay.itau());
    return it;
}

// Sparse gradient of one constraint plus an optional diagonal curvature.
struct Constraint
{
    double value = 0.0;
    std::vector<std::pair<arma::uword, double>> grad;
    arma::uword curv_index = 0;
    double curv = 0.0;       // second derivative, zero for linear pieces
};

// Values (and, when requested, derivatives) of every inequality at v.
std::vector<Constraint> evaluate_constraints(const PaProblem &problem, const Layout &lay,
                                             const Linearization &lin, const arma::vec &v,
                                             bool with_derivatives)
{
    const arma::uword n = lay.n;
    const double floor_a = 1e-12 * problem.total_power;

    std::vector<Constraint> cons;
    cons.reserve(3 * n + 5 * lay.n_active());

    for (arma::uword b = 0; b < n; ++b)
    {
        Constraint c;
        c.value = floor_a - v(lay.ia(b));
        if (with_derivatives)
            c.grad = {{lay.ia(b), -1.0}};
        cons.push_back(std::move(c));
    }

    for (arma::uword b = 0; b < n; ++b)
    {
        Constraint c;
        c.value = -v(lay.ib(b));
        if (with_derivatives)
            c.grad = {{lay.ib(b), -1.0}};
        cons.push_back(std::move(c));
    }

    // tau + C_b <= log2(1 + a_b alpha_b)
    for (arma::uword b = 0; b < n; ++b)
    {
        const double alpha = v(lay.ia(b));
        const double s = 1.0 + problem.a(b) * alpha;
        Constraint c;
        c.value = v(lay.itau()) - std::log2(s);
        if (lay.slot[b] >= 0)
            c.value += v(lay.ic(static_cast<arma::uword>(lay.slot[b])));
        if (with_derivatives)
        {
            c.grad.push_back({lay.itau(), 1.0});
            if (lay.slot[b] >= 0)
                c.grad.push_back({lay.ic(static_cast<arma::uword>(lay.slot[b])), 1.0});
            c.grad.push_back({lay.ia(b), -problem.a(b) / (ln2 * s)});
            c.curv_index = lay.ia(b);
            c.curv = problem.a(b) * problem.a(b) / (ln2 * s * s);
        }
        cons.push_back(std::move(c));
    }

    for (arma::uword j = 0; j < lay.n_active(); ++j)
    {
        const arma::uword b = lay.active[j];

        // ln(e_bb) + X - Y <= Z
        {
            Constraint c;
            c.value = std::log(problem.e(b, b)) + v(lay.ix(j)) - v(lay.iy(j)) - v(lay.iz(j));
            if (with_derivatives)
                c.grad = {{lay.ix(j), 1.0}, {lay.iy(j), -1.0}, {lay.iz(j), -1.0}};
            cons.push_back(std::move(c));
        }

        // I <= sum_{k != b} e_bk alpha_k + sum_k e_bk beta_k + noise
        {
            Constraint c;
            double rhs = problem.noise;
            for (arma::uword k = 0; k < n; ++k)
            {
                if (k != b)
                    rhs += problem.e(b, k) * v(lay.ia(k));
                rhs += problem.e(b, k) * v(lay.ib(k));
            }
            c.value = v(lay.ii(j)) - rhs;
            if (with_derivatives)
            {
                c.grad.push_back({lay.ii(j), 1.0});
                for (arma::uword k = 0; k < n; ++k)
                {
                    if (problem.e(b, k) == 0.0)
                        continue;
                    if (k != b)
                        c.grad.push_back({lay.ia(k), -problem.e(b, k)});
                    c.grad.push_back({lay.ib(k), -problem.e(b, k)});
                }
            }
            cons.push_back(std::move(c));
        }

        // exp(Y) <= I
        {
            const double ey = std::exp(v(lay.iy(j)));
            Constraint c;
            c.value = ey - v(lay.ii(j));
            if (with_derivatives)
            {
                c.grad = {{lay.iy(j), ey}, {lay.ii(j), -1.0}};
                c.curv_index = lay.iy(j);
                c.curv = ey;
            }
            cons.push_back(std::move(c));
        }

        // alpha <= exp(Xbar) (X - Xbar + 1)
        {
            const double ex = std::exp(lin.x_bar(j));
            Constraint c;
            c.value = v(lay.ia(b)) - ex * (v(lay.ix(j)) - lin.x_bar(j) + 1.0);
            if (with_derivatives)
                c.grad = {{lay.ia(b), 1.0}, {lay.ix(j), -ex}};
            cons.push_back(std::move(c));
        }

        // exp(Z) <= 2^Cbar (ln2 (C - Cbar) + 1) - 1
        {
            const double ez = std::exp(v(lay.iz(j)));
            const double p2 = std::exp2(lin.c_bar(j));
            Constraint c;
            c.value = ez - p2 * (ln2 * (v(lay.ic(j)) - lin.c_bar(j)) + 1.0) + 1.0;
            if (with_derivatives)
            {
                c.grad = {{lay.iz(j), ez}, {lay.ic(j), -p2 * ln2}};
                c.curv_index = lay.iz(j);
                c.curv = ez;
            }
            cons.push_back(std::move(c));
        }
    }

    return cons;
}

double max_residual(const std::vector<Constraint> &cons)
{
    double worst = -std::numeric_limits<double>::infinity();
    for (const Constraint &c : cons)
        worst = std::max(worst, c.value);
    return worst;
}

// Barrier objective t * (-tau) - sum log(-g); +inf outside the interior.
double barrier_value(const std::vector<Constraint> &cons, const arma::vec &v, const Layout &lay,
                     double t)
{
    double val = -t * v(lay.itau());
    for (const Constraint &c : cons)
    {
        if (!(c.value < 0.0))
            return std::numeric_limits<double>::infinity();
        val -= std::log(-c.value);
    }
    return val;
}

} // namespace

PaProblem extract_pa_problem(const LinkGains &gains, double total_power)
{
    PaProblem problem;
    problem.a = gains.bob_signal;
    problem.cross = gains.bob_cross;
    problem.e = gains.eve_gain;
    problem.noise = gains.noise;
    problem.total_power = total_power;
    validate_problem(problem);
    return problem;
}

arma::vec evaluate_rates(const PaProblem &problem, const arma::vec &alpha, const arma::vec &beta)
{
    const arma::uword n = problem.n_users();
    arma::vec rates(n);
    for (arma::uword b = 0; b < n; ++b)
    {
        double interference = problem.noise;
        for (arma::uword k = 0; k < n; ++k)
            if (k != b)
                interference += problem.cross(b, k) * (alpha(k) + beta(k));
        const double sinr = problem.a(b) * alpha(b) * problem.noise / interference;
        rates(b) = std::log2(1.0 + sinr);
    }
    return rates;
}

arma::vec evaluate_eve_rates(const PaProblem &problem, const arma::vec &alpha,
                             const arma::vec &beta)
{
    const arma::uword n = problem.n_users();
    arma::vec rates(n);
    for (arma::uword b = 0; b < n; ++b)
    {
        const double sinr = problem.e(b, b) * alpha(b) / eve_denominator(problem, alpha, beta, b);
        rates(b) = std::log2(1.0 + sinr);
    }
    return rates;
}

arma::vec evaluate_secrecy(const PaProblem &problem, const arma::vec &alpha,
                           const arma::vec &beta)
{
    if (alpha.n_elem != problem.n_users() || beta.n_elem != problem.n_users())
        throw std::invalid_argument("evaluate_secrecy: power split does not match user count");
    arma::vec s = evaluate_rates(problem, alpha, beta) - evaluate_eve_rates(problem, alpha, beta);
    s.for_each([](double &x) { if (x < 0.0) x = 0.0; });
    return s;
}

namespace
{

// Strictly interior subproblem start derived from a power split: every
// inequality is slack by construction (offsets of 0.01 in the log domain,
// 1% in the denominator bound).
PaIterate make_start(const PaProblem &problem, const Layout &lay, const arma::vec &alpha,
                     const arma::vec &beta)
{
    PaIterate it;
    it.alpha = alpha;
    it.beta = beta;
    it.c.set_size(lay.n_active());
    it.i_e.set_size(lay.n_active());
    it.x.set_size(lay.n_active());
    it.y.set_size(lay.n_active());
    it.z.set_size(lay.n_active());

    arma::vec c_full(lay.n, arma::fill::zeros);
    for (arma::uword j = 0; j < lay.n_active(); ++j)
    {
        const arma::uword b = lay.active[j];
        const double denom = eve_denominator(problem, alpha, beta, b);
        it.i_e(j) = 0.99 * denom;
        it.y(j) = std::log(it.i_e(j)) - 0.01;
        it.x(j) = std::log(alpha(b)) + 0.01;
        it.z(j) = std::log(problem.e(b, b)) + it.x(j) - it.y(j) + 0.01;
        it.c(j) = std::log2(1.0 + std::exp(it.z(j))) + 0.01;
        c_full(b) = it.c(j);
    }

    double tau = std::numeric_limits<double>::infinity();
    for (arma::uword b = 0; b < lay.n; ++b)
        tau = std::min(tau, std::log2(1.0 + problem.a(b) * alpha(b)) - c_full(b));
    it.tau = tau - 0.01;
    return it;
}

Linearization make_linearization(const PaProblem &problem, const Layout &lay,
                                 const arma::vec &alpha, const arma::vec &beta)
{
    Linearization lin;
    lin.active.set_size(lay.n_active());
    lin.x_bar.set_size(lay.n_active());
    lin.c_bar.set_size(lay.n_active());
    for (arma::uword j = 0; j < lay.n_active(); ++j)
    {
        const arma::uword b = lay.active[j];
        lin.active(j) = b;
        lin.x_bar(j) = std::log(alpha(b));
        const double sinr = problem.e(b, b) * alpha(b) / eve_denominator(problem, alpha, beta, b);
        lin.c_bar(j) = std::log2(1.0 + sinr);
    }
    return lin;
}

} // namespace

PaIterate solve_inner_convex(const PaProblem &problem, const Linearization &lin,
                             const PaIterate &start, const SolverOptions &options)
{
    validate_problem(problem);
    const Layout lay = make_layout(problem);
    if (lin.x_bar.n_elem != lay.n_active() || lin.c_bar.n_elem != lay.n_active())
        throw std::invalid_argument("solve_inner_convex: linearization size mismatch");

    const arma::uword nv = lay.nv();
    arma::vec v = pack(lay, start);

    {
        const auto cons = evaluate_constraints(problem, lay, lin, v, false);
        if (max_residual(cons) >= 0.0)
            throw std::invalid_argument("solve_inner_convex: start point is not strictly feasible");
    }

    const double m = static_cast<double>(3 * lay.n + 5 * lay.n_active());

    // power budget normal: ones over the alpha and beta entries
    arma::vec eq(nv, arma::fill::zeros);
    eq.head(2 * lay.n).ones();

    double t = options.barrier_t0;
    arma::uword newton_total = 0;
    double last_decrement = 0.0;

    while (true)
    {
        for (arma::uword step = 0; step < options.newton_max; ++step)
        {
            const auto cons = evaluate_constraints(problem, lay, lin, v, true);

            arma::vec grad(nv, arma::fill::zeros);
            arma::mat hess(nv, nv, arma::fill::zeros);
            grad(lay.itau()) = -t;

            for (const Constraint &c : cons)
            {
                const double s = -1.0 / c.value;
                for (const auto &[i, gi] : c.grad)
                {
                    grad(i) += s * gi;
                    for (const auto &[k, gk] : c.grad)
                        hess(i, k) += s * s * gi * gk;
                }
                if (c.curv != 0.0)
                    hess(c.curv_index, c.curv_index) += s * c.curv;
            }

            arma::mat kkt(nv + 1, nv + 1, arma::fill::zeros);
            kkt.submat(0, 0, nv - 1, nv - 1) = hess;
            kkt.col(nv).head(nv) = eq;
            kkt.row(nv).head(nv) = eq.t();
            arma::vec rhs(nv + 1, arma::fill::zeros);
            rhs.head(nv) = -grad;

            // late barrier stages are extremely stiff (weights of active
            // constraints grow like t^2); take the plain LU solution and
            // fall back to a ridge when the factorization breaks down, the
            // line search below guards step quality either way
            arma::vec sol;
            bool solved = arma::solve(sol, kkt, rhs, arma::solve_opts::fast) && sol.is_finite();
            if (!solved)
            {
                arma::mat kkt_reg = kkt;
                const double ridge = 1e-12 * arma::abs(arma::vec(hess.diag())).max();
                for (arma::uword d = 0; d < nv; ++d)
                    kkt_reg(d, d) += ridge;
                solved = arma::solve(sol, kkt_reg, rhs) && sol.is_finite();
            }
            if (!solved)
                throw std::runtime_error("solve_inner_convex: singular Newton system");
            const arma::vec dx = sol.head(nv);

            const double decrement2 = arma::dot(dx, hess * dx);
            last_decrement = std::max(decrement2, 0.0);
            ++newton_total;
            if (0.5 * last_decrement < options.newton_tol)
                break;

            const double base = barrier_value(cons, v, lay, t);
            const double slope = arma::dot(grad, dx);
            double stepsize = 1.0;
            bool moved = false;
            for (int ls = 0; ls < 100; ++ls)
            {
                const arma::vec trial = v + stepsize * dx;
                const auto trial_cons = evaluate_constraints(problem, lay, lin, trial, false);
                const double trial_val = barrier_value(trial_cons, trial, lay, t);
                if (trial_val <= base + options.backtrack_slope * stepsize * slope)
                {
                    v = trial;
                    moved = true;
                    break;
                }
                stepsize *= options.backtrack_shrink;
            }
            if (!moved)
                break;   // no feasible descent left at this stage
        }

        if (m / t < options.barrier_tol)
            break;
        t *= options.barrier_mu;
    }

    PaIterate result = unpack(lay, v);
    result.newton_iterations = newton_total;
    result.kkt_residual = m / t + std::sqrt(last_decrement) / t;
    return result;
}

PaSolution solve_sca(const PaProblem &problem, const SolverOptions &options)
{
    validate_problem(problem);
    const Layout lay = make_layout(problem);
    const arma::uword n = problem.n_users();

    arma::vec alpha(n), beta(n);
    alpha.fill(problem.total_power / (2.0 * static_cast<double>(n)));
    beta.fill(problem.total_power / (2.0 * static_cast<double>(n)));

    double best_tau = evaluate_secrecy(problem, alpha, beta).min();
    std::vector<double> trace{best_tau};

    PaSolution sol;
    sol.converged = false;

    for (arma::uword iter = 1; iter <= options.sca_max_iterations; ++iter)
    {
        const Linearization lin = make_linearization(problem, lay, alpha, beta);
        const PaIterate start = make_start(problem, lay, alpha, beta);
        const PaIterate inner = solve_inner_convex(problem, lin, start, options);
        sol.iterations = iter;

        if (inner.tau < start.tau - 1e-6)
            throw NonMonotone("solve_sca: inner solver returned tau " +
                              std::to_string(inner.tau) + " below its feasible start " +
                              std::to_string(start.tau));

        // project back onto the exact budget and score with the original
        // objective; only improving steps are kept
        arma::vec alpha_new = inner.alpha;
        arma::vec beta_new = inner.beta;
        const double scale = problem.total_power / (arma::sum(alpha_new) + arma::sum(beta_new));
        alpha_new *= scale;
        beta_new *= scale;

        const double tau_new = evaluate_secrecy(problem, alpha_new, beta_new).min();
        if (tau_new > best_tau)
        {
            const double gain = tau_new - best_tau;
            alpha = alpha_new;
            beta = beta_new;
            best_tau = tau_new;
            trace.push_back(best_tau);
            if (gain < options.sca_tol)
            {
                sol.converged = true;
                break;
            }
        }
        else
        {
            sol.converged = true;
            break;
        }
    }

    // drop numerically dead shares, then restore the exact budget
    const double clip = 1e-9 * problem.total_power;
    alpha.for_each([clip](double &x) { if (x < clip) x = 0.0; });
    beta.for_each([clip](double &x) { if (x < clip) x = 0.0; });
    const double total = arma::sum(alpha) + arma::sum(beta);
    alpha *= problem.total_power / total;
    beta *= problem.total_power / total;

    sol.alpha = alpha;
    sol.beta = beta;
    sol.secrecy = evaluate_secrecy(problem, alpha, beta);
    sol.tau = sol.secrecy.min();
    sol.trace = arma::vec(trace);
    return sol;
}

PaSolution grid_search_oracle(const PaProblem &problem, double step)
{
    validate_problem(problem);
    if (!(step > 0.0))
        throw std::invalid_argument("grid_search_oracle: step must be positive");
    const arma::uword n = problem.n_users();
    if (n > 3)
        throw std::invalid_argument("grid_search_oracle: supports at most 3 users");

    const arma::uword units = std::max<arma::uword>(
        1, static_cast<arma::uword>(std::llround(problem.total_power / step)));
    const double quantum = problem.total_power / static_cast<double>(units);
    const arma::uword cells = 2 * n;

    arma::vec best_alpha(n, arma::fill::zeros), best_beta(n, arma::fill::zeros);
    double best_tau = -std::numeric_limits<double>::infinity();

    arma::vec split(cells, arma::fill::zeros);
    arma::vec alpha(n), beta(n);

    // lexicographic walk over all ways to drop `units` quanta into the
    // 2 n power cells; ties keep the first candidate, so results do not
    // depend on floating-point vagaries of equal scores
    std::vector<arma::uword> counts(cells, 0);
    const std::function<void(arma::uword, arma::uword)> recurse =
        [&](arma::uword cell, arma::uword remaining)
    {
        if (cell + 1 == cells)
        {
            counts[cell] = remaining;
            for (arma::uword b = 0; b < n; ++b)
            {
                alpha(b) = quantum * static_cast<double>(counts[b]);
                beta(b) = quantum * static_cast<double>(counts[n + b]);
            }
            const double tau = evaluate_secrecy(problem, alpha, beta).min();
            if (tau > best_tau)
            {
                best_tau = tau;
                best_alpha = alpha;
                best_beta = beta;
            }
            return;
        }
        for (arma::uword take = 0; take <= remaining; ++take)
        {
            counts[cell] = take;
            recurse(cell + 1, remaining - take);
        }
    };
    recurse(0, units);

    PaSolution sol;
    sol.alpha = best_alpha;
    sol.beta = best_beta;
    sol.secrecy = evaluate_secrecy(problem, best_alpha, best_beta);
    sol.tau = sol.secrecy.min();
    sol.trace = arma::vec{sol.tau};
    sol.iterations = 1;
    sol.converged = true;
    return sol;
}

PaProblem random_problem(Rng &rng, arma::uword n_users, double total_power)
{
    if (n_users == 0)
        throw std::invalid_argument("random_problem: n_users must be positive");

    PaProblem problem;
    problem.a.set_size(n_users);
    problem.cross.zeros(n_users, n_users);
    problem.e.set_size(n_users, n_users);
    problem.noise = 1.0;
    problem.total_power = total_power;

    for (arma::uword b = 0; b < n_users; ++b)
        problem.a(b) = std::pow(10.0, rng.uniform(-2.0, 2.0));
    for (arma::uword b = 0; b < n_users; ++b)
        for (arma::uword k = 0; k < n_users; ++k)
            problem.e(b, k) = std::pow(10.0, rng.uniform(-2.0, 2.0));

    return problem;
}

PaSolution fixed_pa(const PaProblem &problem, double data_fraction)
{
    validate_problem(problem);
    if (!(data_fraction >= 0.0) || data_fraction > 1.0)
        throw std::invalid_argument("fixed_pa: data_fraction must be in [0, 1]");

    const arma::uword n = problem.n_users();
    const double per_user = problem.total_power / static_cast<double>(n);

    PaSolution sol;
    sol.alpha = arma::vec(n, arma::fill::value(per_user * data_fraction));
    sol.beta = arma::vec(n, arma::fill::value(per_user * (1.0 - data_fraction)));
    sol.secrecy = evaluate_secrecy(problem, sol.alpha, sol.beta);
    sol.tau = sol.secrecy.min();
    sol.trace = arma::vec{sol.tau};
    sol.iterations = 0;
    sol.converged = true;
    return sol;
}

} // namespace holosec
