// SPDX-License-Identifier: Apache-2.0
//
// mixfield - interference analysis for mixed near-/far-field XL-array links
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

#include "mixfield/steering.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mixfield
{
    namespace
    {
        void check_angle(double value, const char *what)
        {
            if (!std::isfinite(value) || !(std::abs(value) < 1.0))
                throw std::invalid_argument(std::string(what) + " must lie in the open interval (-1, 1)");
        }
    }

    FarFieldDirection FarFieldDirection::from_aod(double phi)
    {
        return FarFieldDirection{std::cos(phi)};
    }

    void validate(FarFieldDirection dir)
    {
        check_angle(dir.psi, "FU spatial angle psi");
    }

    void validate(NearFieldPoint p)
    {
        check_angle(p.theta, "NU spatial angle theta");
        if (!std::isfinite(p.r) || p.r <= 0.0)
            throw std::invalid_argument("NU distance r must be positive and finite");
    }

    ComplexVector far_steering(const ArrayConfig &cfg, FarFieldDirection dir)
    {
        validate(dir);
        const auto n_ant = std::size_t(cfg.n_antennas);
        const double amplitude = 1.0 / std::sqrt(double(n_ant));

        ComplexVector a(n_ant);
        for (std::size_t n = 0; n < n_ant; ++n)
            a[n] = std::polar(amplitude, std::numbers::pi * double(n) * dir.psi);
        return a;
    }

    // r_n - r, written as (delta^2 d^2 - 2 r theta delta d) / (r_n + r) to avoid cancellation at large r
    static double path_difference(const ArrayConfig &cfg, NearFieldPoint p, int n)
    {
        const double y = element_offset(n, cfg.n_antennas) * cfg.spacing;
        const double num = y * y - 2.0 * p.r * p.theta * y;
        const double rn = std::sqrt(p.r * p.r + num);
        return num / (rn + p.r);
    }

    double element_distance(const ArrayConfig &cfg, NearFieldPoint p, int n)
    {
        validate(p);
        const double y = element_offset(n, cfg.n_antennas) * cfg.spacing;
        return std::sqrt(p.r * p.r + y * y - 2.0 * p.r * p.theta * y);
    }

    ComplexVector near_steering(const ArrayConfig &cfg, NearFieldPoint p)
    {
        validate(p);
        const int n_ant = cfg.n_antennas;
        const double amplitude = 1.0 / std::sqrt(double(n_ant));
        const double k = 2.0 * std::numbers::pi / cfg.wavelength;

        ComplexVector b(static_cast<std::size_t>(n_ant));
        for (int n = 0; n < n_ant; ++n)
            b[std::size_t(n)] = std::polar(amplitude, -k * path_difference(cfg, p, n));
        return b;
    }

    std::complex<double> inner_product(const ComplexVector &b, const ComplexVector &a)
    {
        if (a.size() != b.size())
            throw std::invalid_argument("inner_product: length mismatch");
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t i = 0; i < a.size(); ++i)
            acc += std::conj(b[i]) * a[i];
        return acc;
    }
}
