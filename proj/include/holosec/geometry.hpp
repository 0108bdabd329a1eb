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

#ifndef holosec_geometry_H
#define holosec_geometry_H

#include <armadillo>

namespace holosec
{

// Planar rectangular antenna surface in the x-y plane. Element spacing is
// given as a fraction of the carrier wavelength; all electrical lengths in
// the toolkit are expressed in wavelengths, so the absolute wavelength only
// matters when converting reference positions (given in meters) to path
// distances.
struct ArrayGeometry
{
    arma::uword n_x = 1;        // elements along x
    arma::uword n_y = 1;        // elements along y
    double spacing = 0.5;       // element spacing in wavelengths, (0, 0.5]
    arma::vec3 reference = {};  // surface center in meters, global frame

    arma::uword n_elements() const { return n_x * n_y; }

    // Side lengths of the surface in wavelengths.
    double aperture_x() const { return static_cast<double>(n_x) * spacing; }
    double aperture_y() const { return static_cast<double>(n_y) * spacing; }
};

// Throws std::invalid_argument if the geometry is outside the supported
// range (empty axes, non-positive spacing, or spacing above half wavelength).
void validate_geometry(const ArrayGeometry &geom);

// Element offsets from the surface center in wavelengths, one row per
// element, columns (x, y, z) with z = 0. Elements are ordered x-major:
// index n = ix * n_y + iy. Offsets are centered so that the element grid
// spans [-(n-1)/2, (n-1)/2] * spacing on each axis.
arma::mat element_offsets(const ArrayGeometry &geom);

// Absolute element positions in meters (reference + offsets * wavelength).
arma::mat element_positions(const ArrayGeometry &geom, double wavelength_m);

// Center-to-center distance between two surfaces in meters.
double reference_distance(const ArrayGeometry &a, const ArrayGeometry &b);

} // namespace holosec

#endif
