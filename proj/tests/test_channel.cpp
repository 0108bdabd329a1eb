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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

using namespace holosec;

TEST_CASE("small-scale draw matches the column-major stream")
{
    Rng a(17, 0);
    Rng b(17, 0);
    arma::cx_mat g = draw_small_scale(a, 4, 3);
    REQUIRE(g.n_rows == 4);
    REQUIRE(g.n_cols == 3);
    for (arma::uword c = 0; c < 3; ++c)
        for (arma::uword r = 0; r < 4; ++r)
            REQUIRE(g(r, c) == b.cgaussian());
}

TEST_CASE("perfect estimation returns the coupling unchanged")
{
    Rng rng(17, 1);
    arma::cx_mat g = draw_small_scale(rng, 5, 5);
    arma::cx_mat g_hat = corrupt_csi(rng, g, 0.0);
    CHECK(arma::abs(g_hat - g).max() == 0.0);
}

TEST_CASE("estimation error keeps the stream aligned across accuracies")
{
    // the error draw happens even at xi = 0, so whatever comes next in the
    // stream does not depend on the accuracy setting
    Rng a(17, 2);
    Rng b(17, 2);
    arma::cx_mat g_a = draw_small_scale(a, 6, 4);
    arma::cx_mat g_b = draw_small_scale(b, 6, 4);
    corrupt_csi(a, g_a, 0.0);
    corrupt_csi(b, g_b, 0.3);
    CHECK(a.uniform() == b.uniform());
}

TEST_CASE("estimate mixes coupling and error with the Gauss-Markov weights")
{
    Rng a(17, 3);
    Rng b(17, 3);
    arma::cx_mat g = draw_small_scale(a, 4, 4);
    (void)draw_small_scale(b, 4, 4);

    const double xi = 0.4;
    arma::cx_mat g_hat = corrupt_csi(a, g, xi);
    arma::cx_mat e = b.cgaussian_matrix(4, 4);
    CHECK(arma::abs(g_hat - (std::sqrt(1.0 - xi * xi) * g + xi * e)).max() < 1e-15);
}

TEST_CASE("estimate variance stays unit for any accuracy")
{
    Rng rng(17, 4);
    arma::cx_mat g = draw_small_scale(rng, 100, 100);
    arma::cx_mat g_hat = corrupt_csi(rng, g, 0.6);
    const double mean_power = arma::accu(arma::square(arma::abs(g_hat))) / 10000.0;
    CHECK(mean_power == Catch::Approx(1.0).margin(0.05));
}

TEST_CASE("estimation weight outside [0, 1] is rejected")
{
    Rng rng(17, 5);
    arma::cx_mat g = draw_small_scale(rng, 2, 2);
    CHECK_THROWS_AS(corrupt_csi(rng, g, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(corrupt_csi(rng, g, 1.1), std::invalid_argument);
    CHECK_NOTHROW(corrupt_csi(rng, g, 1.0));
}

TEST_CASE("channel assembly is the weighted basis sandwich")
{
    SpectralModel tx = make_spectral_model(ArrayGeometry{6, 6, 0.25, {}});
    SpectralModel rx = make_spectral_model(ArrayGeometry{4, 4, 0.25, {}});

    Rng rng(21, 0);
    arma::cx_mat g = draw_small_scale(rng, rx.n_harmonics(), tx.n_harmonics());
    arma::cx_mat h = assemble_channel(tx, rx, g);

    REQUIRE(h.n_rows == rx.n_elements());
    REQUIRE(h.n_cols == tx.n_elements());

    arma::cx_mat want = rx.basis * arma::diagmat(rx.weights) * g * arma::diagmat(tx.weights) *
                        tx.basis.t();
    CHECK(arma::abs(h - want).max() < 1e-11);
    CHECK(arma::abs(rx.weights - std::sqrt(16.0) * rx.sigma).max() < 1e-15);
}

TEST_CASE("channel assembly rejects mismatched coupling shapes")
{
    SpectralModel tx = make_spectral_model(ArrayGeometry{6, 6, 0.25, {}});
    SpectralModel rx = make_spectral_model(ArrayGeometry{4, 4, 0.25, {}});
    arma::cx_mat g(rx.n_harmonics() + 1, tx.n_harmonics(), arma::fill::zeros);
    CHECK_THROWS_AS(assemble_channel(tx, rx, g), std::invalid_argument);
}

TEST_CASE("average channel energy scales with both element counts")
{
    SpectralModel tx = make_spectral_model(ArrayGeometry{8, 8, 0.25, {}});
    SpectralModel rx = make_spectral_model(ArrayGeometry{8, 8, 0.25, {}});

    Rng rng(23, 0);
    double acc = 0.0;
    const int trials = 500;
    for (int t = 0; t < trials; ++t)
    {
        arma::cx_mat g = draw_small_scale(rng, rx.n_harmonics(), tx.n_harmonics());
        acc += arma::accu(arma::square(arma::abs(assemble_channel(tx, rx, g))));
    }
    // E ||H||_F^2 = (sum w_rx^2)(sum w_tx^2) = N_rx N_tx / 4
    CHECK(acc / trials == Catch::Approx(64.0 * 64.0 / 4.0).epsilon(0.05));
}

TEST_CASE("path gain follows the distance power law")
{
    CHECK(path_gain(1.0, 2.7, 1000.0) == Catch::Approx(1000.0));
    CHECK(path_gain(10.0, 2.0, 1000.0) == Catch::Approx(10.0));
    const double d = std::sqrt(40.0 * 40.0 + 20.0 * 20.0);
    CHECK(path_gain(d, 2.7, 1000.0) ==
          Catch::Approx(1000.0 * std::pow(d, -2.7)).epsilon(1e-12));
}
