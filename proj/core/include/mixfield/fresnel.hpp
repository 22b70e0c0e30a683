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

#pragma once

#include "mixfield/array_geometry.hpp"
#include "mixfield/steering.hpp"

namespace mixfield
{
    /*!
    Fresnel integrals

    C(x) = int_0^x cos(pi t^2 / 2) dt,  S(x) = int_0^x sin(pi t^2 / 2) dt

    Evaluated with a Maclaurin series for |x| <= 1.6. Beyond that the auxiliary functions f and g
    (C = 1/2 + f sin(pi x^2 / 2) - g cos(pi x^2 / 2), S = 1/2 - f cos(pi x^2 / 2) - g sin(pi x^2 / 2))
    are obtained from the continued fraction of erfc, evaluated with the modified Lentz method.
    Both functions are odd; negative arguments are mirrored so that C(-x) == -C(x) bitwise.
    Absolute accuracy is a few ulps of 0.5 over the whole real line.

    Non-finite arguments throw std::invalid_argument.
    */
    struct FresnelPair
    {
        double c = 0.0;
        double s = 0.0;
    };

    FresnelPair fresnel(double x);
    double fresnel_c(double x);
    double fresnel_s(double x);

    struct FresnelAuxiliary
    {
        double f = 0.0;
        double g = 0.0;
    };

    // Auxiliary functions f(x), g(x), defined for x > 0.
    FresnelAuxiliary fresnel_auxiliary(double x);

    // beta1 = (theta - psi) sqrt(r / (d (1 - theta^2)))
    // beta2 = (N / 2) sqrt(d (1 - theta^2) / r)
    struct BetaParams
    {
        double beta1 = 0.0;
        double beta2 = 0.0;
    };

    BetaParams beta_params(const ArrayConfig &cfg, FarFieldDirection dir, NearFieldPoint p);

    // Below this beta2 the coherence function returns its analytic limit 1.
    inline constexpr double kSmallBeta2 = 1e-6;

    // G(beta1, beta2) = |C_hat + j S_hat| / (2 beta2), where
    //   C_hat = C(beta1 + beta2) - C(beta1 - beta2),  S_hat = S(beta1 + beta2) - S(beta1 - beta2).
    // Not clamped to [0, 1]. Throws std::invalid_argument for beta2 <= 0.
    double g_function(BetaParams b);
}
