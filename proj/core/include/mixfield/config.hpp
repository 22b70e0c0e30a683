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

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mixfield/sweep.hpp"

namespace mixfield
{
    class ConfigError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // A sweep as described by a JSON config file:
    //
    // {
    //   "preset": "fig3b",                        // optional starting point
    //   "name": "my-sweep",
    //   "base": { "n_antennas": 256, "carrier_freq_hz": 30e9, "p_near_dbm": 20, "p_far_dbm": 30,
    //             "beta_db": -62, "noise_dbm": -70, "theta": 0.05, "psi": 0, "r": 3 },
    //   "swept": "n_antennas",
    //   "grid": [16, 32, 48] | { "start": 16, "stop": 1024, "step": 16 } | { "start": 2, "stop": 300, "count": 601 },
    //   "series": { "axis": "r", "values": [3, 6, 9] },
    //   "methods": ["exact", "fresnel_sum", "closed_form"],
    //   "rate_method": "exact",
    //   "threads": 4,
    //   "out": "fig3b.csv"
    // }
    //
    // Keys present in the file override the preset; absent keys keep the preset (or built-in) defaults.
    struct SweepJob
    {
        SweepSpec spec;
        unsigned threads = 1;
        std::optional<std::string> out;
    };

    // Throws ConfigError on malformed JSON, unknown keys or invalid values.
    SweepJob parse_sweep_config(std::string_view json_text);

    // Throws IoError when the file cannot be read, ConfigError otherwise.
    SweepJob load_sweep_config(const std::filesystem::path &path);
}
