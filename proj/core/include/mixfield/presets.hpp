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

#include <span>
#include <string_view>

#include "mixfield/sweep.hpp"

namespace mixfield
{
    // Experiment presets mirroring the figure studies. Unless overridden, every preset uses
    // N = 256 at 30 GHz, beta = -62 dB, P_near = 20 dBm, P_far = 30 dBm, sigma^2 = -70 dBm, r = 3 m.
    enum class Preset
    {
        Fig1,
        Fig2Surface,
        Fig3a,
        Fig3b,
        Fig4a,
        Fig4b,
        Fig4c,
        Fig4d,
        Fig6a,
        Fig6b,
        Fig6c,
        Fig6d
    };

    std::span<const Preset> all_presets();
    std::string_view to_string(Preset preset); // "fig1", "fig2_surface", ...
    Preset preset_from_string(std::string_view name); // throws std::invalid_argument

    // One-line description for list-presets.
    std::string_view describe(Preset preset);

    SweepSpec preset(Preset which);
    SweepSpec preset(std::string_view name);
}
