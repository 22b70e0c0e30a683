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

#include "mixfield/array_geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mixfield
{
    ArrayConfig make_array_config(int n_antennas, double carrier_freq)
    {
        if (n_antennas < 1)
            throw std::invalid_argument("make_array_config: n_antennas must be >= 1, got " + std::to_string(n_antennas));
        if (!std::isfinite(carrier_freq) || carrier_freq <= 0.0)
            throw std::invalid_argument("make_array_config: carrier frequency must be positive and finite");

        ArrayConfig cfg;
        cfg.n_antennas = n_antennas;
        cfg.carrier_freq = carrier_freq;
        cfg.wavelength = kSpeedOfLight / carrier_freq;
        cfg.spacing = 0.5 * cfg.wavelength;
        cfg.aperture = double(n_antennas) * cfg.spacing;
        cfg.rayleigh_distance = rayleigh_distance(cfg.aperture, cfg.wavelength);
        cfg.fresnel_lower = 1.2 * cfg.aperture;
        cfg.approx_valid_distance = 0.5 * std::sqrt(cfg.aperture * cfg.aperture * cfg.aperture / cfg.wavelength);
        return cfg;
    }

    double rayleigh_distance(double aperture, double wavelength)
    {
        if (!(aperture > 0.0) || !(wavelength > 0.0))
            throw std::invalid_argument("rayleigh_distance: aperture and wavelength must be positive");
        return 2.0 * aperture * aperture / wavelength;
    }

    double element_offset(int n, int n_antennas)
    {
        if (n_antennas < 1 || n < 0 || n >= n_antennas)
            throw std::out_of_range("element_offset: index " + std::to_string(n) + " outside [0, " +
                                    std::to_string(n_antennas) + ")");
        return 0.5 * double(2 * n - n_antennas + 1);
    }

    FieldRegion classify_region(const ArrayConfig &cfg, double r)
    {
        if (!std::isfinite(r) || r <= 0.0)
            throw std::invalid_argument("classify_region: distance must be positive and finite");
        if (r < cfg.fresnel_lower)
            return FieldRegion::TooClose;
        if (r >= cfg.rayleigh_distance)
            return FieldRegion::FarField;
        return FieldRegion::NearField;
    }

    std::string_view to_string(FieldRegion region)
    {
        switch (region)
        {
        case FieldRegion::TooClose:
            return "TooClose";
        case FieldRegion::NearField:
            return "NearField";
        case FieldRegion::FarField:
            return "FarField";
        }
        return "Unknown";
    }
}
