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

#include "mixfield/presets.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace mixfield
{
    namespace
    {
        constexpr std::array kPresets{Preset::Fig1,  Preset::Fig2Surface, Preset::Fig3a, Preset::Fig3b,
                                      Preset::Fig4a, Preset::Fig4b,       Preset::Fig4c, Preset::Fig4d,
                                      Preset::Fig6a, Preset::Fig6b,       Preset::Fig6c, Preset::Fig6d};

        // Grid density for continuous axes whose range is read off a figure.
        constexpr std::size_t kDenseCount = 601;

        SweepSpec base_spec(Preset p)
        {
            SweepSpec spec;
            spec.name = std::string(to_string(p));
            return spec; // Scenario defaults carry the Table-1 budget
        }
    }

    std::span<const Preset> all_presets()
    {
        return kPresets;
    }

    std::string_view to_string(Preset preset)
    {
        switch (preset)
        {
        case Preset::Fig1: return "fig1";
        case Preset::Fig2Surface: return "fig2_surface";
        case Preset::Fig3a: return "fig3a";
        case Preset::Fig3b: return "fig3b";
        case Preset::Fig4a: return "fig4a";
        case Preset::Fig4b: return "fig4b";
        case Preset::Fig4c: return "fig4c";
        case Preset::Fig4d: return "fig4d";
        case Preset::Fig6a: return "fig6a";
        case Preset::Fig6b: return "fig6b";
        case Preset::Fig6c: return "fig6c";
        case Preset::Fig6d: return "fig6d";
        }
        return "unknown";
    }

    Preset preset_from_string(std::string_view name)
    {
        for (Preset p : kPresets)
            if (name == to_string(p))
                return p;
        throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
    }

    std::string_view describe(Preset preset)
    {
        switch (preset)
        {
        case Preset::Fig1: return "interference power [dBm] vs FU angle psi; N=256, theta=0, r=3 m, P_far=30 dBm";
        case Preset::Fig2Surface: return "G(beta1, beta2) surface; beta1 in [-3, 3], beta2 in (0, 10]";
        case Preset::Fig3a: return "exact vs closed form vs N; theta=0.05, psi=0, r in {3, 9} m";
        case Preset::Fig3b: return "normalized interference vs N in {16..1024}; theta=0.05, psi=0, r in {3, 6, 9} m";
        case Preset::Fig4a: return "normalized interference vs FU angle psi in [-0.6, 0.6]; theta=0, N=256, r=3 m";
        case Preset::Fig4b: return "normalized interference vs angle difference theta-psi; theta=0, N=256, r in {3, 10, 30} m";
        case Preset::Fig4c: return "normalized interference vs NU angle theta; psi=0, N=256, r in {3, 10, 30} m";
        case Preset::Fig4d: return "normalized interference vs NU distance r in [2, 300] m; theta=0, N=256, theta-psi in {0.005, 0.1, 0.15, 0.2}";
        case Preset::Fig6a: return "rates and rate loss vs N; theta=0.05, psi=0, r=3 m";
        case Preset::Fig6b: return "rates and rate loss vs FU angle psi; theta=0, N=256, r=3 m";
        case Preset::Fig6c: return "rates and rate loss vs NU angle theta; psi=0, N=256, r=3 m";
        case Preset::Fig6d: return "rates and rate loss vs NU distance r; theta=0.05, psi=0, N=256";
        }
        return "";
    }

    SweepSpec preset(Preset which)
    {
        SweepSpec spec = base_spec(which);
        Scenario &b = spec.base;

        switch (which)
        {
        case Preset::Fig1:
            b.theta = 0.0;
            b.r = 3.0;
            b.p_far_dbm = 30.0;
            spec.swept = Axis::Psi;
            spec.grid = linspace(-0.5, 0.5, kDenseCount);
            break;

        case Preset::Fig2Surface:
            spec.swept = Axis::Beta1;
            spec.grid = linspace(-3.0, 3.0, 61);
            spec.series_axis = Axis::Beta2;
            spec.series = linspace(0.1, 10.0, 100);
            spec.methods = MethodSet{false, false, true};
            spec.rate_method = Method::ClosedForm;
            break;

        case Preset::Fig3a:
            b.theta = 0.05;
            b.psi = 0.0;
            spec.swept = Axis::NAntennas;
            spec.grid = arange_inclusive(64.0, 512.0, 32.0);
            spec.series_axis = Axis::Distance;
            spec.series = {3.0, 9.0};
            break;

        case Preset::Fig3b:
            b.theta = 0.05;
            b.psi = 0.0;
            spec.swept = Axis::NAntennas;
            spec.grid = arange_inclusive(16.0, 1024.0, 16.0);
            spec.series_axis = Axis::Distance;
            spec.series = {3.0, 6.0, 9.0};
            spec.rate_method = Method::ClosedForm;
            break;

        case Preset::Fig4a:
            b.theta = 0.0;
            spec.swept = Axis::Psi;
            spec.grid = linspace(-0.6, 0.6, kDenseCount);
            spec.rate_method = Method::ClosedForm;
            break;

        case Preset::Fig4b:
            b.theta = 0.0;
            spec.swept = Axis::AngleDiff;
            spec.grid = linspace(0.0, 0.5, kDenseCount);
            spec.series_axis = Axis::Distance;
            spec.series = {3.0, 10.0, 30.0};
            spec.rate_method = Method::ClosedForm;
            break;

        case Preset::Fig4c:
            b.psi = 0.0;
            spec.swept = Axis::Theta;
            spec.grid = linspace(-0.9, 0.9, kDenseCount);
            spec.series_axis = Axis::Distance;
            spec.series = {3.0, 10.0, 30.0};
            spec.rate_method = Method::ClosedForm;
            break;

        case Preset::Fig4d:
            b.theta = 0.0;
            spec.swept = Axis::Distance;
            spec.grid = linspace(2.0, 300.0, kDenseCount);
            spec.series_axis = Axis::AngleDiff;
            spec.series = {0.005, 0.1, 0.15, 0.2};
            spec.rate_method = Method::ClosedForm;
            break;

        case Preset::Fig6a:
            b.theta = 0.05;
            b.psi = 0.0;
            spec.swept = Axis::NAntennas;
            spec.grid = arange_inclusive(100.0, 1000.0, 100.0);
            break;

        case Preset::Fig6b:
            b.theta = 0.0;
            spec.swept = Axis::Psi;
            spec.grid = linspace(-0.5, 0.5, kDenseCount);
            break;

        case Preset::Fig6c:
            b.psi = 0.0;
            spec.swept = Axis::Theta;
            spec.grid = linspace(-0.5, 0.5, kDenseCount);
            break;

        case Preset::Fig6d:
            b.theta = 0.05;
            b.psi = 0.0;
            spec.swept = Axis::Distance;
            spec.grid = linspace(2.0, 100.0, kDenseCount);
            break;
        }
        return spec;
    }

    SweepSpec preset(std::string_view name)
    {
        return preset(preset_from_string(name));
    }
}
