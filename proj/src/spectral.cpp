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

#include "holosec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace holosec
{

namespace
{

double clamp_unit(double v)
{
    return std::min(1.0, std::max(-1.0, v));
}

// Integral over y of 1 / sqrt(1 - x^2 - y^2) across [y_lo, y_hi] clipped to
// the disk: arcsin(y / sqrt(1 - x^2)) between the clipped bounds.
double arc_length(double x, double y_lo, double y_hi)
{
    const double a2 = 1.0 - x * x;
    if (a2 <= 0.0)
        return 0.0;

    const double a = std::sqrt(a2);
    const double lo = std::max(y_lo, -a);
    const double hi = std::min(y_hi, a);
    if (hi <= lo)
        return 0.0;

    return std::asin(clamp_unit(hi / a)) - std::asin(clamp_unit(lo / a));
}

double simpson_rule(double a, double fa, double fm, double b, double fb)
{
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)> &f, double a, double fa, double b,
                     double fb, double m, double fm, double whole, double tol, int depth)
{
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);

    const double left = simpson_rule(a, fa, flm, m, fm);
    const double right = simpson_rule(m, fm, frm, b, fb);
    const double delta = left + right - whole;

    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;

    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)> &f, double a, double b, double tol)
{
    if (b <= a)
        return 0.0;

    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = simpson_rule(a, fa, fm, b, fb);
    return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, 60);
}

} // namespace

WavenumberLattice build_lattice(const ArrayGeometry &geom)
{
    validate_geometry(geom);

    WavenumberLattice lat;
    lat.aperture_x = geom.aperture_x();
    lat.aperture_y = geom.aperture_y();
    // guard against 4.999999... representations of an integral aperture
    lat.m_x = static_cast<arma::uword>(std::ceil(lat.aperture_x - 1e-9));
    lat.m_y = static_cast<arma::uword>(std::ceil(lat.aperture_y - 1e-9));
    lat.m_x = std::max<arma::uword>(lat.m_x, 1);
    lat.m_y = std::max<arma::uword>(lat.m_y, 1);

    const long long mx = static_cast<long long>(lat.m_x);
    const long long my = static_cast<long long>(lat.m_y);
    lat.indices.set_size(4 * lat.m_x * lat.m_y, 2);

    arma::uword row = 0;
    for (long long lx = -mx; lx < mx; ++lx)
        for (long long ly = -my; ly < my; ++ly)
        {
            lat.indices(row, 0) = lx;
            lat.indices(row, 1) = ly;
            ++row;
        }

    return lat;
}

double angular_variance(long long l_x, long long l_y, double aperture_x, double aperture_y)
{
    if (!(aperture_x > 0.0) || !(aperture_y > 0.0))
        throw std::invalid_argument("angular_variance: apertures must be positive");

    const double x0 = static_cast<double>(l_x) / aperture_x;
    const double x1 = static_cast<double>(l_x + 1) / aperture_x;
    const double y0 = static_cast<double>(l_y) / aperture_y;
    const double y1 = static_cast<double>(l_y + 1) / aperture_y;

    // nearest point of the cell to the origin; cells clear of the disk
    // carry exactly zero variance
    const double nx = (x0 > 0.0) ? x0 : (x1 < 0.0 ? x1 : 0.0);
    const double ny = (y0 > 0.0) ? y0 : (y1 < 0.0 ? y1 : 0.0);
    if (nx * nx + ny * ny >= 1.0)
        return 0.0;

    const double a = std::max(x0, -1.0);
    const double b = std::min(x1, 1.0);
    if (b <= a)
        return 0.0;

    const auto f = [y0, y1](double x) { return arc_length(x, y0, y1); };

    // split where the disk edge crosses the horizontal cell edges; the
    // integrand has square-root cusps there and the adaptive rule converges
    // much faster when they sit on panel boundaries
    std::vector<double> cuts{a, b};
    for (double edge : {y0, y1})
    {
        const double r2 = 1.0 - edge * edge;
        if (r2 <= 0.0)
            continue;
        const double r = std::sqrt(r2);
        for (double c : {-r, r})
            if (c > a + 1e-15 && c < b - 1e-15)
                cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());

    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        integral += adaptive_simpson(f, cuts[i], cuts[i + 1], 1e-12);

    return integral / (4.0 * arma::datum::pi);
}

double angular_variance(long long l_x, long long l_y, const ArrayGeometry &geom)
{
    return angular_variance(l_x, l_y, geom.aperture_x(), geom.aperture_y());
}

arma::vec build_sigma_vector(const ArrayGeometry &geom, const WavenumberLattice &lattice)
{
    validate_geometry(geom);

    arma::vec sigma(lattice.size());
    for (arma::uword r = 0; r < lattice.size(); ++r)
    {
        const double var = angular_variance(lattice.indices(r, 0), lattice.indices(r, 1),
                                            lattice.aperture_x, lattice.aperture_y);
        sigma(r) = std::sqrt(std::max(var, 0.0));
    }
    return sigma;
}

arma::cx_mat build_basis(const arma::mat &offsets_wavelengths, const WavenumberLattice &lattice)
{
    if (offsets_wavelengths.n_cols != 3)
        throw std::invalid_argument("build_basis: offsets must be n x 3");

    const arma::uword n_el = offsets_wavelengths.n_rows;
    const arma::uword n_h = lattice.size();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_el));
    const double two_pi = 2.0 * arma::datum::pi;

    arma::cx_mat basis(n_el, n_h);
    for (arma::uword r = 0; r < n_h; ++r)
    {
        const double kx = two_pi * static_cast<double>(lattice.indices(r, 0)) / lattice.aperture_x;
        const double ky = two_pi * static_cast<double>(lattice.indices(r, 1)) / lattice.aperture_y;
        const double sx = static_cast<double>(lattice.indices(r, 0)) / lattice.aperture_x;
        const double sy = static_cast<double>(lattice.indices(r, 1)) / lattice.aperture_y;
        const double kz = two_pi * std::sqrt(std::max(0.0, 1.0 - sx * sx - sy * sy));

        for (arma::uword n = 0; n < n_el; ++n)
        {
            const double phase = kx * offsets_wavelengths(n, 0) + ky * offsets_wavelengths(n, 1) +
                                 kz * offsets_wavelengths(n, 2);
            basis(n, r) = std::polar(scale, phase);
        }
    }

    return basis;
}

arma::cx_mat build_basis(const ArrayGeometry &geom, const WavenumberLattice &lattice)
{
    return build_basis(element_offsets(geom), lattice);
}

namespace
{

struct CachedTables
{
    WavenumberLattice lattice;
    arma::cx_mat basis;
    arma::vec sigma;
};

std::mutex cache_mutex;
std::map<std::tuple<arma::uword, arma::uword, double>, std::shared_ptr<const CachedTables>>
    model_cache;

} // namespace

SpectralModel make_spectral_model(const ArrayGeometry &geom)
{
    validate_geometry(geom);

    const auto key = std::make_tuple(geom.n_x, geom.n_y, geom.spacing);
    std::shared_ptr<const CachedTables> tables;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = model_cache.find(key);
        if (it != model_cache.end())
            tables = it->second;
    }

    if (!tables)
    {
        auto fresh = std::make_shared<CachedTables>();
        fresh->lattice = build_lattice(geom);
        fresh->basis = build_basis(geom, fresh->lattice);
        fresh->sigma = build_sigma_vector(geom, fresh->lattice);
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            auto [it, inserted] = model_cache.emplace(key, fresh);
            tables = it->second;
        }
    }

    SpectralModel model;
    model.geometry = geom;
    model.lattice = tables->lattice;
    model.basis = tables->basis;
    model.sigma = tables->sigma;
    model.weights = std::sqrt(static_cast<double>(geom.n_elements())) * tables->sigma;
    return model;
}

} // namespace holosec
