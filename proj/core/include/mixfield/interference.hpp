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

#include <string_view>

#include "mixfield/array_geometry.hpp"
#include "mixfield/link_rate.hpp"
#include "mixfield/steering.hpp"

namespace mixfield
{
    // Normalized interference power f(N, psi, theta, r) = |b^H(theta, r) a(psi)| evaluated three ways:
    //   Exact       exact steering vectors (ground truth)
    //   FresnelSum  discrete sum after the quadratic (Fresnel) phase expansion of r_n
    //   ClosedForm  G(beta1, beta2) from the Fresnel integrals
    enum class Method
    {
        Exact,
        FresnelSum,
        ClosedForm
    };

    std::string_view to_string(Method method);
    Method method_from_string(std::string_view name); // "exact", "fresnel_sum", "closed_form"

    double interference_exact(const ArrayConfig &cfg, FarFieldDirection dir, NearFieldPoint p);

    // (1/N) |sum_{n=0}^{N-1} exp(j pi (n^2 A - n (theta - psi + (N - 1) A)))|,  A = d (1 - theta^2) / (2 r)
    double interference_fresnel_sum(const ArrayConfig &cfg, FarFieldDirection dir, NearFieldPoint p);

    // G(beta_params(...)). Accuracy degrades for r < approx_valid_distance, see below_approx_validity().
    double interference_approx(const ArrayConfig &cfg, FarFieldDirection dir, NearFieldPoint p);

    double interference(const ArrayConfig &cfg, FarFieldDirection dir, NearFieldPoint p, Method method);

    // True when r is below 0.5 sqrt(D^3 / lambda); results are still returned in that case.
    bool below_approx_validity(const ArrayConfig &cfg, double r);

    // P_far g_near f^2 [W]
    double received_interference_power(const LinkBudget &link, const ArrayConfig &cfg, FarFieldDirection dir,
                                       NearFieldPoint p, Method method);
}
