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

namespace mixfield
{
    // Speed of light used to derive the carrier wavelength [m/s].
    // 3e8 makes 30 GHz map to exactly lambda = 0.01 m.
    inline constexpr double kSpeedOfLight = 3.0e8;

    // Uniform linear array with half-wavelength spacing, centered on the origin along the y-axis.
    //
    // Aperture convention: D = N * d (not (N - 1) * d). With d = lambda / 2 this makes
    // the two Rayleigh-distance forms 2 D^2 / lambda and N^2 lambda / 2 identical.
    struct ArrayConfig
    {
        int n_antennas = 1;                 // N >= 1
        double carrier_freq = 0.0;          // [Hz]
        double wavelength = 0.0;            // lambda = c / f [m]
        double spacing = 0.0;               // d = lambda / 2 [m]
        double aperture = 0.0;              // D = N d [m]
        double rayleigh_distance = 0.0;     // Z = 2 D^2 / lambda [m]
        double fresnel_lower = 0.0;         // 1.2 D [m], below this the NU is "too close"
        double approx_valid_distance = 0.0; // 0.5 sqrt(D^3 / lambda) [m], quadratic phase expansion accurate beyond this
    };

    enum class FieldRegion
    {
        TooClose,
        NearField,
        FarField
    };

    // Throws std::invalid_argument for n_antennas < 1 or a non-positive / non-finite frequency.
    ArrayConfig make_array_config(int n_antennas, double carrier_freq);

    // Z = 2 D^2 / lambda for an arbitrary aperture.
    double rayleigh_distance(double aperture, double wavelength);

    // delta_n = (2n - N + 1) / 2, the element offset in units of d. Offsets are symmetric about zero.
    double element_offset(int n, int n_antennas);

    // TooClose iff r < 1.2 D, FarField iff r >= Z, NearField otherwise.
    FieldRegion classify_region(const ArrayConfig &cfg, double r);

    std::string_view to_string(FieldRegion region);
}
