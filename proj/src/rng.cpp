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

#include <cmath>

namespace holosec
{

std::uint64_t splitmix64(std::uint64_t &state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t master_seed, std::uint64_t trial_index)
{
    std::uint64_t state = master_seed;
    std::uint64_t a = splitmix64(state);
    state ^= trial_index * 0x9e3779b97f4a7c15ULL;
    std::uint64_t b = splitmix64(state);
    engine_.seed(a ^ (b + 0x632be59bd9b4e019ULL + (a << 6) + (a >> 2)));
}

std::uint64_t Rng::raw()
{
    return engine_();
}

double Rng::uniform()
{
    // 53 bit mantissa, value in [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi)
{
    return lo + (hi - lo) * uniform();
}

double Rng::gaussian()
{
    if (has_spare_)
    {
        has_spare_ = false;
        return spare_;
    }

    // Box-Muller; u is kept away from 0 so the log stays finite
    double u = 0.0;
    do
        u = uniform();
    while (u <= 0.0);
    const double v = uniform();

    const double r = std::sqrt(-2.0 * std::log(u));
    const double angle = 2.0 * arma::datum::pi * v;

    spare_ = r * std::sin(angle);
    has_spare_ = true;
    return r * std::cos(angle);
}

std::complex<double> Rng::cgaussian()
{
    const double re = gaussian();
    const double im = gaussian();
    return {re * arma::datum::sqrt2 / 2.0, im * arma::datum::sqrt2 / 2.0};
}

arma::cx_mat Rng::cgaussian_matrix(arma::uword n_rows, arma::uword n_cols)
{
    arma::cx_mat m(n_rows, n_cols);
    for (arma::uword c = 0; c < n_cols; ++c)
        for (arma::uword r = 0; r < n_rows; ++r)
            m(r, c) = cgaussian();
    return m;
}

} // namespace holosec
