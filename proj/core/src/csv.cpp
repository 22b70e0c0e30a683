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

#include "mixfield/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>

namespace mixfield
{
    namespace
    {
        constexpr std::size_t kColumns = 19;

        void put(std::string &line, const std::optional<double> &v)
        {
            if (v)
                line += format_double(*v);
        }

        std::vector<std::string> split(const std::string &line)
        {
            std::vector<std::string> fields;
            std::string cur;
            for (char ch : line)
            {
                if (ch == ',')
                {
                    fields.push_back(std::move(cur));
                    cur.clear();
                }
                else
                {
                    cur += ch;
                }
            }
            fields.push_back(std::move(cur));
            return fields;
        }

        double parse_double(const std::string &s, std::size_t row)
        {
            char *end = nullptr;
            const double v = std::strtod(s.c_str(), &end);
            if (end == s.c_str() || *end != '\0')
                throw std::invalid_argument("read_csv: row " + std::to_string(row) + ": bad number '" + s + "'");
            return v;
        }

        std::optional<double> opt_double(const std::string &s, std::size_t row)
        {
            if (s.empty())
                return std::nullopt;
            return parse_double(s, row);
        }

        FieldRegion parse_region(const std::string &s, std::size_t row)
        {
            for (FieldRegion r : {FieldRegion::TooClose, FieldRegion::NearField, FieldRegion::FarField})
                if (s == to_string(r))
                    return r;
            throw std::invalid_argument("read_csv: row " + std::to_string(row) + ": bad region '" + s + "'");
        }
    }

    const std::vector<std::string> &csv_header()
    {
        static const std::vector<std::string> header{
            "swept_value", "series_value", "n_antennas", "theta", "psi", "r", "beta1", "beta2",
            "f_exact", "f_sum", "f_closed", "interference_power_dbm", "sinr_db", "rate", "rate_ideal",
            "rate_loss", "rate_loss_bound", "region", "approx_domain_warning"};
        return header;
    }

    std::string format_double(double value)
    {
        if (std::isnan(value))
            return "nan";
        if (std::isinf(value))
            return value > 0 ? "inf" : "-inf";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", value);
        return buf;
    }

    void write_csv(std::ostream &out, const std::vector<SweepRecord> &records)
    {
        const auto &header = csv_header();
        std::string line;
        for (std::size_t i = 0; i < header.size(); ++i)
        {
            if (i)
                line += ',';
            line += header[i];
        }
        line += '\n';
        out << line;

        for (const SweepRecord &r : records)
        {
            line.clear();
            line += format_double(r.swept_value);
            line += ',';
            put(line, r.series_value);
            line += ',';
            if (r.n_antennas)
                line += std::to_string(*r.n_antennas);
            for (const auto *v : {&r.theta, &r.psi, &r.r, &r.beta1, &r.beta2, &r.f_exact, &r.f_sum, &r.f_closed,
                                  &r.interference_power_dbm, &r.sinr_db, &r.rate, &r.rate_ideal, &r.rate_loss,
                                  &r.rate_loss_bound})
            {
                line += ',';
                put(line, *v);
            }
            line += ',';
            if (r.region)
                line += to_string(*r.region);
            line += ',';
            if (r.approx_domain_warning)
                line += *r.approx_domain_warning ? "true" : "false";
            line += '\n';
            out << line;
        }
    }

    void emit_csv(const std::vector<SweepRecord> &records, const std::filesystem::path &destination)
    {
        std::ofstream out(destination, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open '" + destination.string() + "' for writing");
        write_csv(out, records);
        out.flush();
        if (!out)
            throw IoError("failed writing CSV to '" + destination.string() + "'");
    }

    std::vector<SweepRecord> read_csv(std::istream &in)
    {
        std::string line;
        if (!std::getline(in, line))
            throw std::invalid_argument("read_csv: missing header");
        if (split(line) != csv_header())
            throw std::invalid_argument("read_csv: unexpected header");

        std::vector<SweepRecord> records;
        std::size_t row = 1;
        while (std::getline(in, line))
        {
            ++row;
            const auto f = split(line);
            if (f.size() != kColumns)
                throw std::invalid_argument("read_csv: row " + std::to_string(row) + " has " + std::to_string(f.size()) +
                                            " fields, expected " + std::to_string(kColumns));
            SweepRecord r;
            r.swept_value = parse_double(f[0], row);
            r.series_value = opt_double(f[1], row);
            if (!f[2].empty())
                r.n_antennas = int(parse_double(f[2], row));
            std::optional<double> *targets[] = {&r.theta, &r.psi, &r.r, &r.beta1, &r.beta2, &r.f_exact, &r.f_sum,
                                                &r.f_closed, &r.interference_power_dbm, &r.sinr_db, &r.rate,
                                                &r.rate_ideal, &r.rate_loss, &r.rate_loss_bound};
            for (std::size_t i = 0; i < std::size(targets); ++i)
                *targets[i] = opt_double(f[3 + i], row);
            if (!f[17].empty())
                r.region = parse_region(f[17], row);
            if (!f[18].empty())
            {
                if (f[18] != "true" && f[18] != "false")
                    throw std::invalid_argument("read_csv: row " + std::to_string(row) + ": bad flag '" + f[18] + "'");
                r.approx_domain_warning = f[18] == "true";
            }
            records.push_back(std::move(r));
        }
        return records;
    }
}
