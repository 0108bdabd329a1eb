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

#include "holosec/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace holosec
{

void validate_geometry(const ArrayGeometry &geom)
{
    if (geom.n_x == 0 || geom.n_y == 0)
        throw std::invalid_argument("ArrayGeometry: n_x and n_y must be positive");
    if (!(geom.spacing > 0.0) || geom.spacing > 0.5)
        throw std::invalid_argument("ArrayGeometry: spacing must be in (0, 0.5] wavelengths, got " +
                                    std::to_string(geom.spacing));
    if (!geom.reference.is_finite())
        throw std::invalid_argument("ArrayGeometry: reference position must be finite");
}

arma::mat element_offsets(const ArrayGeometry &geom)
{
    validate_geometry(geom);

    const arma::uword n = geom.n_elements();
    arma::mat offsets(n, 3, arma::fill::zeros);

    const double cx = 0.5 * static_cast<double>(geom.n_x - 1);
    const double cy = 0.5 * static_cast<double>(geom.n_y - 1);

    for (arma::uword ix = 0; ix < geom.n_x; ++ix)
        for (arma::uword iy = 0; iy < geom.n_y; ++iy)
        {
            const arma::uword row = ix * geom.n_y + iy;
            offsets(row, 0) = (static_cast<double>(ix) - cx) * geom.spacing;
            offsets(row, 1) = (static_cast<double>(iy) - cy) * geom.spacing;
        }

    return offsets;
}

arma::mat element_positions(const ArrayGeometry &geom, double wavelength_m)
{
    if (!(wavelength_m > 0.0))
        throw std::invalid_argument("element_positions: wavelength must be positive");

    arma::mat pos = element_offsets(geom) * wavelength_m;
    pos.each_row() += geom.reference.t();
    return pos;
}

double reference_distance(const ArrayGeometry &a, const ArrayGeometry &b)
{
    return arma::norm(a.reference - b.reference, 2);
}

} // namespace holosec
