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
#include "holosec/channel.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <vector>

using namespace holosec;

namespace
{

struct TwoUserSetup
{
    SpectralModel alice;
    std::vector<SpectralModel> bobs;
    SpectralModel eve;
    std::vector<arma::cx_mat> g_bobs;
    arma::cx_mat g_eve;
};

TwoUserSetup default_setup(std::uint64_t trial, double spacing = 0.25)
{
    TwoUserSetup s;
    s.alice = make_spectral_model(ArrayGeometry{20, 20, spacing, {0.0, 0.0, 0.0}});
    s.bobs = {make_spectral_model(ArrayGeometry{10, 10, spacing, {40.0, -20.0, 0.0}}),
              make_spectral_model(ArrayGeometry{10, 10, spacing, {60.0, 30.0, 0.0}})};
    s.eve = make_spectral_model(ArrayGeometry{10, 10, spacing, {60.0, 25.0, 0.0}});

    Rng rng(1, trial);
    for (const SpectralModel &bob : s.bobs)
        s.g_bobs.push_back(draw_small_scale(rng, bob.n_harmonics(), s.alice.n_harmonics()));
    s.g_eve = draw_small_scale(rng, s.eve.n_harmonics(), s.alice.n_harmonics());
    return s;
}

} // namespace

TEST_CASE("reduced channel composes back into the element-domain channel")
{
    TwoUserSetup s = default_setup(0);
    arma::cx_mat reduced = reduced_effective_channel(s.alice, s.bobs[0], s.g_bobs[0]);

    REQUIRE(reduced.n_rows == s.bobs[0].n_elements());
    REQUIRE(reduced.n_cols == s.alice.n_harmonics());

    arma::cx_mat full = assemble_channel(s.alice, s.bobs[0], s.g_bobs[0]);
    CHECK(arma::abs(reduced * s.alice.basis.t() - full).max() < 1e-12);
}

TEST_CASE("interference stack concatenates the other users ascending")
{
    TwoUserSetup s = default_setup(1);
    std::vector<arma::cx_mat> reduced;
    for (arma::uword b = 0; b < 2; ++b)
        reduced.push_back(reduced_effective_channel(s.alice, s.bobs[b], s.g_bobs[b]));

    arma::cx_mat stack0 = interference_stack(reduced, 0);
    CHECK(stack0.n_rows == s.alice.n_harmonics());
    CHECK(stack0.n_cols == s.bobs[1].n_elements());
    CHECK(arma::abs(stack0 - reduced[1].t()).max() == 0.0);

    std::vector<arma::cx_mat> one{reduced[0]};
    arma::cx_mat empty = interference_stack(one, 0);
    CHECK(empty.n_rows == s.alice.n_harmonics());
    CHECK(empty.n_cols == 0);
}

TEST_CASE("default two-user stack rank and null dimension")
{
    for (std::uint64_t trial : {0ULL, 1ULL, 2ULL})
    {
        TwoUserSetup s = default_setup(trial);
        std::vector<arma::cx_mat> reduced;
        for (arma::uword b = 0; b < 2; ++b)
            reduced.push_back(reduced_effective_channel(s.alice, s.bobs[b], s.g_bobs[b]));

        NullSpaceBeam beam = null_space_beamformer(interference_stack(reduced, 0),
                                                   s.alice.basis);
        // 10x10 user surface at quarter-wavelength spacing couples through
        // 32 propagating harmonics of the 100-harmonic transmit lattice
        CHECK(beam.rank == 32);
        CHECK(beam.null_dim == 68);
    }
}

TEST_CASE("eighth-wavelength spacing shrinks the propagating set")
{
    TwoUserSetup s = default_setup(0, 0.125);
    std::vector<arma::cx_mat> reduced;
    for (arma::uword b = 0; b < 2; ++b)
        reduced.push_back(reduced_effective_channel(s.alice, s.bobs[b], s.g_bobs[b]));

    NullSpaceBeam beam = null_space_beamformer(interference_stack(reduced, 0), s.alice.basis);
    CHECK(beam.rank == 12);
    CHECK(beam.null_dim == 24);
}

TEST_CASE("beam lies in the stack null space with unit norm and fixed phase")
{
    TwoUserSetup s = default_setup(3);
    std::vector<arma::cx_mat> reduced;
    for (arma::uword b = 0; b < 2; ++b)
        reduced.push_back(reduced_effective_channel(s.alice, s.bobs[b], s.g_bobs[b]));

    for (arma::uword b = 0; b < 2; ++b)
    {
        arma::cx_mat stack = interference_stack(reduced, b);
        NullSpaceBeam beam = null_space_beamformer(stack, s.alice.basis);

        CHECK(arma::norm(beam.p) == Catch::Approx(1.0).margin(1e-12));
        CHECK(arma::norm(beam.f) == Catch::Approx(1.0).margin(1e-12));
        CHECK(arma::abs(stack.t() * beam.p).max() < 1e-10);
        CHECK(arma::abs(s.alice.basis * beam.p - beam.f).max() < 1e-12);

        const arma::uword top = arma::abs(beam.p).index_max();
        CHECK(beam.p(top).real() > 0.0);
        CHECK(std::abs(beam.p(top).imag()) < 1e-12);
    }
}

TEST_CASE("preferred direction is projected into the null space")
{
    TwoUserSetup s = default_setup(4);
    std::vector<arma::cx_mat> reduced;
    for (arma::uword b = 0; b < 2; ++b)
        reduced.push_back(reduced_effective_channel(s.alice, s.bobs[b], s.g_bobs[b]));

    arma::cx_mat stack = interference_stack(reduced, 0);
    arma::cx_mat u, v;
    arma::vec sv;
    arma::svd_econ(u, sv, v, reduced[0]);
    arma::cx_vec preferred = v.col(0);

    NullSpaceBeam beam = null_space_beamformer(stack, s.alice.basis, preferred);
    CHECK(arma::abs(stack.t() * beam.p).max() < 1e-10);
    CHECK(arma::norm(beam.p) == Catch::Approx(1.0).margin(1e-12));

    // seeding with the dominant direction of the own channel buys a much
    // stronger intended link than taking whatever the SVD basis ends with
    NullSpaceBeam generic = null_space_beamformer(stack, s.alice.basis);
    const double gain_pref = arma::norm(reduced[0] * beam.p);
    const double gain_generic = arma::norm(reduced[0] * generic.p);
    CHECK(gain_pref > gain_generic);
    CHECK(gain_pref * gain_pref > 300.0);
}

TEST_CASE("empty stack defaults to the first coordinate direction")
{
    SpectralModel alice = make_spectral_model(ArrayGeometry{6, 6, 0.25, {}});
    arma::cx_mat stack(alice.n_harmonics(), 0);

    NullSpaceBeam beam = null_space_beamformer(stack, alice.basis);
    CHECK(beam.rank == 0);
    CHECK(beam.null_dim == alice.n_harmonics());
    CHECK(std::abs(beam.p(0) - std::complex<double>(1.0, 0.0)) < 1e-15);

    arma::cx_vec preferred(alice.n_harmonics(), arma::fill::zeros);
    preferred(2) = std::complex<double>(0.0, 2.0);
    NullSpaceBeam seeded = null_space_beamformer(stack, alice.basis, preferred);
    CHECK(std::abs(seeded.p(2) - std::complex<double>(1.0, 0.0)) < 1e-12);
}

TEST_CASE("full-rank stack is infeasible")
{
    SpectralModel basis_owner = make_spectral_model(ArrayGeometry{4, 3, 0.25, {}});
    const arma::uword n = basis_owner.n_harmonics();
    Rng rng(7, 0);
    arma::cx_mat stack = rng.cgaussian_matrix(n, n);
    CHECK_THROWS_AS(null_space_beamformer(stack, basis_owner.basis), InfeasibleNullSpace);
}

TEST_CASE("preferred direction orthogonal to the null space is degenerate")
{
    SpectralModel owner = make_spectral_model(ArrayGeometry{4, 3, 0.25, {}});
    const arma::uword n = owner.n_harmonics();

    // stack spans e_1 .. e_{n-1}; null space is span(e_n)
    arma::cx_mat stack(n, n - 1, arma::fill::zeros);
    for (arma::uword k = 0; k < n - 1; ++k)
        stack(k, k) = 1.0;

    arma::cx_vec preferred(n, arma::fill::zeros);
    preferred(0) = 1.0;
    CHECK_THROWS_AS(null_space_beamformer(stack, owner.basis, preferred), DegenerateChannel);
}

TEST_CASE("matched combiner is the normalized beam response")
{
    TwoUserSetup s = default_setup(5);
    std::vector<arma::cx_mat> reduced;
    for (arma::uword b = 0; b < 2; ++b)
        reduced.push_back(reduced_effective_channel(s.alice, s.bobs[b], s.g_bobs[b]));

    arma::cx_mat u;
    arma::vec sv;
    arma::cx_mat v;
    arma::svd_econ(u, sv, v, reduced[0]);
    NullSpaceBeam beam =
        null_space_beamformer(interference_stack(reduced, 0), s.alice.basis, v.col(0));
    arma::cx_vec q = matched_combiner(s.bobs[0], s.g_bobs[0], s.alice.weights, beam.p);

    CHECK(arma::norm(q) == Catch::Approx(1.0).margin(1e-12));
    arma::cx_vec response = reduced[0] * beam.p;
    CHECK(arma::abs(q - response / arma::norm(response)).max() < 1e-12);

    arma::cx_mat dead(s.bobs[0].n_harmonics(), s.alice.n_harmonics(), arma::fill::zeros);
    CHECK_THROWS_AS(matched_combiner(s.bobs[0], dead, s.alice.weights, beam.p),
                    DegenerateChannel);
}

TEST_CASE("scenario design nulls every unintended user")
{
    TwoUserSetup s = default_setup(6);
    BeamformingSolution beams = design_beamformers(s.alice, s.bobs, s.eve, s.g_bobs, s.g_eve);

    REQUIRE(beams.precoders.size() == 2);
    REQUIRE(beams.bob_combiners.size() == 2);
    REQUIRE(beams.eve_combiners.size() == 2);
    CHECK(arma::all(beams.stack_ranks == 32));
    CHECK(arma::all(beams.null_dims == 68));

    for (arma::uword b = 0; b < 2; ++b)
    {
        CHECK(arma::norm(beams.precoders[b]) == Catch::Approx(1.0).margin(1e-12));
        CHECK(arma::norm(beams.bob_combiners[b]) == Catch::Approx(1.0).margin(1e-12));
        CHECK(arma::norm(beams.eve_combiners[b]) == Catch::Approx(1.0).margin(1e-12));
    }

    // with the design couplings being the true ones, cross responses vanish
    for (arma::uword b = 0; b < 2; ++b)
    {
        arma::cx_mat h = assemble_channel(s.alice, s.bobs[b], s.g_bobs[b]);
        arma::cx_vec f_own = s.alice.basis * beams.precoders[b];
        arma::cx_vec f_other = s.alice.basis * beams.precoders[1 - b];
        const double wanted = std::norm(arma::cdot(beams.bob_combiners[b], h * f_own));
        const double leaked = std::norm(arma::cdot(beams.bob_combiners[b], h * f_other));
        CHECK(leaked / wanted < 1e-16);
    }
}
