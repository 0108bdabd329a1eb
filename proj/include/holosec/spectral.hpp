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

#ifndef holosec_spectral_H
#define holosec_spectral_H

#include "holosec/geometry.hpp"

#include <armadillo>

namespace holosec
{

// Rectangular grid of plane-wave harmonics supported by a finite aperture.
// Index limits follow the aperture in wavelengths: m = ceil(L), harmonics
// l in {-m, ..., m-1} per axis, full Cartesian product.
struct WavenumberLattice
{
    arma::uword m_x = 0;        // per-axis half count along x
    arma::uword m_y = 0;        // per-axis half count along y
    arma::imat indices;         // n x 2 signed harmonic pairs (l_x, l_y)
    double aperture_x = 0.0;    // L_x in wavelengths
    double aperture_y = 0.0;    // L_y in wavelengths

    arma::uword size() const { return indices.n_rows; }
};

// Harmonic grid for a surface: m = ceil(L / lambda) per axis, rows ordered
// l_x-major with l_y varying fastest, i.e. row r = (l_x + m_x) * 2 m_y +
// (l_y + m_y). Total count 4 m_x m_y.
WavenumberLattice build_lattice(const ArrayGeometry &geom);

// Variance of one angular harmonic: integral of the isotropic spectral
// density 1 / (4 pi sqrt(1 - x^2 - y^2)) over the lattice cell
// [l_x / L_x, (l_x + 1) / L_x] x [l_y / L_y, (l_y + 1) / L_y] clipped to
// the unit disk. Exactly zero for cells that do not meet the disk. The
// inner integral is closed form (arcsin difference); the outer integral is
// adaptive Simpson with absolute tolerance 1e-11, subdivided at the points
// where the disk boundary crosses the cell edges so the square-root cusps
// sit on panel boundaries.
double angular_variance(long long l_x, long long l_y, double aperture_x, double aperture_y);
double angular_variance(long long l_x, long long l_y, const ArrayGeometry &geom);

// Per-harmonic standard deviations sigma(l) >= 0 in lattice row order.
// The squared entries over the full lattice sum to 1/2: half of the unit
// density mass, the other half belonging to propagation directions behind
// the surface that a z = 0 aperture cannot distinguish.
arma::vec build_sigma_vector(const ArrayGeometry &geom, const WavenumberLattice &lattice);

// Fourier plane-wave basis, n_elements x n_harmonics. Column r holds
// (1 / sqrt(N)) exp(j k_r . c_n) with in-plane wavenumber components
// 2 pi l_x / L_x and 2 pi l_y / L_y and the z component
// gamma = 2 pi sqrt(max(0, 1 - (l_x / L_x)^2 - (l_y / L_y)^2)).
// Element offsets lie at z = 0, so gamma never contributes phase here; it
// is kept explicit so the basis stays correct for off-plane probes.
arma::cx_mat build_basis(const arma::mat &offsets_wavelengths, const WavenumberLattice &lattice);
arma::cx_mat build_basis(const ArrayGeometry &geom, const WavenumberLattice &lattice);

// Everything the channel model needs to know about one surface.
struct SpectralModel
{
    ArrayGeometry geometry;
    WavenumberLattice lattice;
    arma::cx_mat basis;   // n_elements x n_harmonics, semi-unitary
    arma::vec sigma;      // per-harmonic standard deviations, mass 1/2
    arma::vec weights;    // sqrt(n_elements) * sigma, the channel deviations

    arma::uword n_elements() const { return geometry.n_elements(); }
    arma::uword n_harmonics() const { return lattice.size(); }
};

// Builds (or fetches from a process-wide cache) the lattice, basis and
// sigma profile for a geometry. The cache key is (n_x, n_y, spacing); the
// reference position does not influence any cached quantity. Thread safe.
SpectralModel make_spectral_model(const ArrayGeometry &geom);

} // namespace holosec

#endif
