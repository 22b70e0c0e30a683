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

#include "mixfield/fresnel.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace mixfield
{
    namespace
    {
        constexpr double kSeriesLimit = 1.6;
        // Beyond this the oscillating part, about 1 / (pi x), is below half an ulp of 0.5.
        constexpr double kSaturation = 1e16;
        constexpr double kEps = std::numeric_limits<double>::epsilon();
        constexpr double kTiny = 1e-300;
        constexpr int kMaxIterations = 500;

        // Joint Maclaurin series. Term k is x (pi x^2 / 2)^k / k!, contributing to C for even k
        // and to S for odd k, divided by 2k + 1 and with alternating signs within each function.
        FresnelPair series(double x)
        {
            const double t = 0.5 * std::numbers::pi * x * x;
            double term = x;
            double c = x;
            double s = 0.0;
            for (int k = 1; k < kMaxIterations; ++k)
            {
                term *= t / double(k);
                const double contrib = term / double(2 * k + 1);
                // C: k = 0, 4, 8, ... positive, k = 2, 6, ... negative. S: k = 1, 5, ... positive, k = 3, 7, ... negative.
                const bool negative = ((k / 2) % 2) == 1;
                if (k % 2 == 0)
                    c += negative ? -contrib : contrib;
                else
                    s += negative ? -contrib : contrib;
                if (k > 2 && contrib < 0.25 * kEps * (std::abs(c) + std::abs(s)))
                    break;
            }
            return {c, s};
        }

        // (cos, sin) of pi x^2 / 2 with x^2 split into hi + lo and hi reduced mod 4.
        std::pair<double, double> quadratic_phase(double x)
        {
            const double hi = x * x;
            const double lo = std::fma(x, x, -hi);
            const double reduced = std::fmod(hi, 4.0) + lo;
            const double phase = 0.5 * std::numbers::pi * reduced;
            return {std::cos(phase), std::sin(phase)};
        }
    }

    FresnelAuxiliary fresnel_auxiliary(double x)
    {
        if (!std::isfinite(x) || x <= 0.0)
            throw std::invalid_argument("fresnel_auxiliary: argument must be positive and finite");
        if (x > 1e150)
            return {1.0 / (std::numbers::pi * x), 0.0};

        // Continued fraction of the complementary error function, modified Lentz:
        //   h = 1 / (b0 + a1 / (b1 + a2 / (b2 + ...))),  b_k = 1 + 4k - j pi x^2,  a_k = -(2k - 1) 2k
        // and g + j f = x h.
        using cplx = std::complex<double>;
        cplx b(1.0, -std::numbers::pi * x * x);
        cplx cc(1.0 / kTiny, 0.0);
        cplx d = 1.0 / b;
        cplx h = d;
        int n = -1;
        int k = 2;
        for (; k <= kMaxIterations; ++k)
        {
            n += 2;
            const double a = -double(n) * double(n + 1);
            b += 4.0;
            d = 1.0 / (a * d + b);
            cc = b + a / cc;
            const cplx del = cc * d;
            h *= del;
            if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps)
                break;
        }
        if (k > kMaxIterations)
            throw std::runtime_error("fresnel_auxiliary: continued fraction did not converge");
        h *= x;
        return {h.imag(), h.real()};
    }

    FresnelPair fresnel(double x)
    {
        if (!std::isfinite(x))
            throw std::invalid_argument("fresnel: argument must be finite");
        const double ax = std::abs(x);
        FresnelPair out;
        if (ax == 0.0)
            return out;
        if (ax <= kSeriesLimit)
        {
            out = series(ax);
        }
        else if (ax > kSaturation)
        {
            out = {0.5, 0.5};
        }
        else
        {
            const auto [f, g] = fresnel_auxiliary(ax);
            const auto [cs, sn] = quadratic_phase(ax);
            out.c = 0.5 + f * sn - g * cs;
            out.s = 0.5 - f * cs - g * sn;
        }
        if (x < 0.0)
        {
            out.c = -out.c;
            out.s = -out.s;
        }
        return out;
    }

    double fresnel_c(double x)
    {
        return fresnel(x).c;
    }

    double fresnel_s(double x)
    {
        return fresnel(x).s;
    }

    BetaParams beta_params(const ArrayConfig &cfg, FarFieldDirection dir, NearFieldPoint p)
    {
        validate(dir);
        validate(p);
        const double one_minus_theta2 = (1.0 - p.theta) * (1.0 + p.theta);
        const double scale = cfg.spacing * one_minus_theta2;
        BetaParams out;
        out.beta1 = (p.theta - dir.psi) * std::sqrt(p.r / scale);
        out.beta2 = 0.5 * double(cfg.n_antennas) * std::sqrt(scale / p.r);
        return out;
    }

    double g_function(BetaParams b)
    {
        if (!std::isfinite(b.beta1) || !std::isfinite(b.beta2))
            throw std::invalid_argument("g_function: parameters must be finite");
        if (b.beta2 <= 0.0)
            throw std::invalid_argument("g_function: beta2 must be positive");
        if (b.beta2 < kSmallBeta2)
            return 1.0;

        const FresnelPair upper = fresnel(b.beta1 + b.beta2);
        const FresnelPair lower = fresnel(b.beta1 - b.beta2);
        const double c_hat = upper.c - lower.c;
        const double s_hat = upper.s - lower.s;
        return std::hypot(c_hat, s_hat) / (2.0 * b.beta2);
    }
}
