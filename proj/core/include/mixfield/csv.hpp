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
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixfield/sweep.hpp"

namespace mixfield
{
    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Column names in emission order, one per SweepRecord field.
    const std::vector<std::string> &csv_header();

    // 17 significant digits, "%.17g"; infinities as "inf" / "-inf".
    std::string format_double(double value);

    // Header row plus one row per record, '\n' line terminators.
    void write_csv(std::ostream &out, const std::vector<SweepRecord> &records);

    // Writes to a file; throws IoError naming the path when it cannot be opened or written.
    void emit_csv(const std::vector<SweepRecord> &records, const std::filesystem::path &destination);

    // Inverse of write_csv. Throws std::invalid_argument on a malformed header or row.
    std::vector<SweepRecord> read_csv(std::istream &in);
}
