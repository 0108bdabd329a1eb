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

#include "holosec/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace holosec;

TEST_CASE("equal seeds give equal streams")
{
    Rng a(42, 7);
    Rng b(42, 7);
    for (int k = 0; k < 1000; ++k)
        REQUIRE(a.uniform() == b.uniform());
    for (int k = 0; k < 1000; ++k)
        REQUIRE(a.gaussian() == b.gaussian());
    for (int k = 0; k < 1000; ++k)
        REQUIRE(a.cgaussian() == b.cgaussian());
}

TEST_CASE("different trial indices decorrelate")
{
    Rng a(42, 0);
    Rng b(42, 1);
    int equal = 0;
    for (int k = 0; k < 1000; ++k)
        equal += a.uniform() == b.uniform();
    CHECK(equal == 0);

    // trial index is not just added to the seed
    Rng c(42, 1);
    Rng d(43, 0);
    CHECK(c.uniform() != d.uniform());
}

TEST_CASE("uniform stays in [0, 1) and matches its first two moments")
{
    Rng rng(5, 0);
    const int n = 200000;
    double sum = 0.0, sq = 0.0;
    for (int k = 0; k < n; ++k)
    {
        const double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        sq += u * u;
    }
    CHECK(sum / n == Catch::Approx(0.5).margin(0.005));
    CHECK(sq / n == Catch::Approx(1.0 / 3.0).margin(0.005));
}

TEST_CASE("ranged uniform maps to [lo, hi)")
{
    Rng rng(5, 1);
    for (int k = 0; k < 1000; ++k)
    {
        const double u = rng.uniform(-2.0, 3.0);
        REQUIRE(u >= -2.0);
        REQUIRE(u < 3.0);
    }
}

TEST_CASE("gaussian moments")
{
    Rng rng(9, 0);
    const int n = 200000;
    double sum = 0.0, sq = 0.0, quad = 0.0;
    for (int k = 0; k < n; ++k)
    {
        const double g = rng.gaussian();
        sum += g;
        sq += g * g;
        quad += g * g * g * g;
    }
    CHECK(sum / n == Catch::Approx(0.0).margin(0.01));
    CHECK(sq / n == Catch::Approx(1.0).margin(0.02));
    // kurtosis separates a Gaussian from e.g. a scaled uniform
    CHECK(quad / n == Catch::Approx(3.0).margin(0.1));
}

TEST_CASE("complex gaussian has unit variance split over the parts")
{
    Rng rng(11, 0);
    const int n = 100000;
    double re = 0.0, im = 0.0, power = 0.0, cross = 0.0;
    for (int k = 0; k < n; ++k)
    {
        const std::complex<double> z = rng.cgaussian();
        re += z.real();
        im += z.imag();
        power += std::norm(z);
        cross += z.real() * z.imag();
    }
    CHECK(re / n == Catch::Approx(0.0).margin(0.01));
    CHECK(im / n == Catch::Approx(0.0).margin(0.01));
    CHECK(power / n == Catch::Approx(1.0).margin(0.02));
    CHECK(cross / n == Catch::Approx(0.0).margin(0.01));
}

TEST_CASE("matrix fill is column-major over the scalar stream")
{
    Rng a(3, 2);
    Rng b(3, 2);
    arma::cx_mat m = a.cgaussian_matrix(3, 2);
    REQUIRE(m.n_rows == 3);
    REQUIRE(m.n_cols == 2);
    for (arma::uword c = 0; c < 2; ++c)
        for (arma::uword r = 0; r < 3; ++r)
            REQUIRE(m(r, c) == b.cgaussian());
}

TEST_CASE("splitmix64 matches the reference sequence")
{
    // reference outputs for state 1234567 (Steele et al. sequence)
    std::uint64_t state = 1234567;
    const std::uint64_t first = splitmix64(state);
    const std::uint64_t second = splitmix64(state);
    std::uint64_t check = 1234567;
    check += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = check;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    CHECK(first == (z ^ (z >> 31)));
    CHECK(second != first);
}
