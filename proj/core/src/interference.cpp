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

#include "mixfield/interference.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mixfield/fresnel.hpp"

namespace mixfield
{
    std::string_view to_string(Method method)
    {
        switch (method)
        {
        case Method::Exact:
            return "exact";
        case Method::FresnelSum:
            return "fresnel_sum";
        case Method::ClosedForm:
            return "closed_form";
        }
        return "unknown";
    }

    Method method_from_string(std::string_view name)
    {
        if (name == "exact")
            return Method::Exact;
        if (name == "fresnel_sum")
            return Method::FresnelSum;
        if (name == "closed_form")
            return Method::ClosedForm;
        throw std::invalid_argument("unknown method '" + std::string(name) + "' (expected exact, fresnel_sum or closed_form)");
    }

    double interference_exact(const ArrayConfig &cfg, FarFieldDirection dir, NearFieldPoint p)
    {
        const ComplexVector b = near_steering(cfg, p);
        const ComplexVector a = far_steering(cfg, dir);
        return std::abs(inner_product(b, a));
    }

    double interference_fresnel_sum(const ArrayConfig &cfg, FarFieldDirection dir, NearFieldPoint p)
    {
        validate(dir);
        validate(p);
        const int n_ant = cfg.n_antennas;
        const double quad = cfg.spacing * (1.0 - p.theta) * (1.0 + p.theta) / (2.0 * p.r);
        const double lin = p.theta - dir.psi + double(n_ant - 1) * quad;

        std::complex<double> acc{0.0, 0.0};
        for (int n = 0; n < n_ant; ++n)
        {
            const double dn = double(n);
            double half_turns = dn * dn * quad - dn * lin; // phase / pi
            half_turns -= 2.0 * std::round(0.5 * half_turns);
            acc += std::polar(1.0, std::numbers::pi * half_turns);
        }
        return std::abs(acc) / double(n_ant);
    }

    double interference_approx(const ArrayConfig &cfg, FarFieldDirection dir, NearFieldPoint p)
    {
        return g_function(beta_params(cfg, dir, p));
    }

    double interference(const ArrayConfig &cfg, FarFieldDirection dir, NearFieldPoint p, Method method)
    {
        switch (method)
        {
        case Method::Exact:
            return interference_exact(cfg, dir, p);
        case Method::FresnelSum:
            return interference_fresnel_sum(cfg, dir, p);
        case Method::ClosedForm:
            return interference_approx(cfg, dir, p);
        }
        throw std::invalid_argument("interference: unknown method");
    }

    bool below_approx_validity(const ArrayConfig &cfg, double r)
    {
        return r < cfg.approx_valid_distance;
    }

    double received_interference_power(const LinkBudget &link, const ArrayConfig &cfg, FarFieldDirection dir,
                                       NearFieldPoint p, Method method)
    {
        link.validate();
        const double f = interference(cfg, dir, p, method);
        return link.p_far * channel_gain_near(link, cfg, p.r) * f * f;
    }
}
