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

#include "mixfield/config.hpp"

#include <fstream>
#include <iterator>
#include <set>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

#include "mixfield/csv.hpp"
#include "mixfield/presets.hpp"

namespace mixfield
{
    namespace
    {
        using json = nlohmann::json;

        void reject_unknown(const json &obj, const std::set<std::string> &allowed, const std::string &where)
        {
            for (const auto &item : obj.items())
                if (!allowed.count(item.key()))
                    throw ConfigError("config: unknown key '" + item.key() + "' in " + where);
        }

        double number(const json &v, const std::string &key)
        {
            if (!v.is_number())
                throw ConfigError("config: '" + key + "' must be a number");
            return v.get<double>();
        }

        std::string text(const json &v, const std::string &key)
        {
            if (!v.is_string())
                throw ConfigError("config: '" + key + "' must be a string");
            return v.get<std::string>();
        }

        std::vector<double> number_list(const json &v, const std::string &key)
        {
            if (!v.is_array())
                throw ConfigError("config: '" + key + "' must be an array of numbers");
            std::vector<double> out;
            for (const auto &e : v)
                out.push_back(number(e, key));
            return out;
        }

        std::vector<double> parse_grid(const json &v)
        {
            if (v.is_array())
                return number_list(v, "grid");
            if (!v.is_object())
                throw ConfigError("config: 'grid' must be an array or a {start, stop, step|count} object");
            reject_unknown(v, {"start", "stop", "step", "count"}, "grid");
            if (!v.contains("start") || !v.contains("stop"))
                throw ConfigError("config: grid object needs 'start' and 'stop'");
            const double start = number(v["start"], "grid.start");
            const double stop = number(v["stop"], "grid.stop");
            if (v.contains("step") == v.contains("count"))
                throw ConfigError("config: grid object needs exactly one of 'step' or 'count'");
            try
            {
                if (v.contains("step"))
                    return arange_inclusive(start, stop, number(v["step"], "grid.step"));
            }
            catch (const std::invalid_argument &e)
            {
                throw ConfigError(std::string("config: ") + e.what());
            }
            const auto &count = v["count"];
            if (!count.is_number_integer() || count.get<long long>() < 1)
                throw ConfigError("config: grid.count must be a positive integer");
            return linspace(start, stop, std::size_t(count.get<long long>()));
        }

        void parse_base(const json &v, Scenario &s)
        {
            if (!v.is_object())
                throw ConfigError("config: 'base' must be an object");
            reject_unknown(v,
                           {"n_antennas", "carrier_freq_hz", "p_near_dbm", "p_far_dbm", "beta_db", "noise_dbm", "theta",
                            "psi", "r", "angle_diff", "beta1", "beta2"},
                           "base");
            if (v.contains("n_antennas"))
            {
                if (!v["n_antennas"].is_number_integer())
                    throw ConfigError("config: 'base.n_antennas' must be an integer");
                s.n_antennas = v["n_antennas"].get<int>();
            }
            const std::pair<const char *, double *> fields[] = {
                {"carrier_freq_hz", &s.carrier_freq}, {"p_near_dbm", &s.p_near_dbm}, {"p_far_dbm", &s.p_far_dbm},
                {"beta_db", &s.beta_db},              {"noise_dbm", &s.noise_dbm},   {"theta", &s.theta},
                {"psi", &s.psi},                      {"r", &s.r},                   {"angle_diff", &s.angle_diff},
                {"beta1", &s.beta1},                  {"beta2", &s.beta2}};
            for (const auto &[key, target] : fields)
                if (v.contains(key))
                    *target = number(v[key], std::string("base.") + key);
        }

        MethodSet parse_methods(const json &v)
        {
            if (!v.is_array())
                throw ConfigError("config: 'methods' must be an array of method names");
            MethodSet set{false, false, false};
            for (const auto &e : v)
            {
                switch (method_from_string(text(e, "methods")))
                {
                case Method::Exact:
                    set.exact = true;
                    break;
                case Method::FresnelSum:
                    set.fresnel_sum = true;
                    break;
                case Method::ClosedForm:
                    set.closed_form = true;
                    break;
                }
            }
            return set;
        }
    }

    SweepJob parse_sweep_config(std::string_view json_text)
    {
        json doc;
        try
        {
            doc = json::parse(json_text.begin(), json_text.end(), nullptr, true, true);
        }
        catch (const json::parse_error &e)
        {
            throw ConfigError(std::string("config: malformed JSON: ") + e.what());
        }
        if (!doc.is_object())
            throw ConfigError("config: top level must be an object");
        reject_unknown(doc, {"preset", "name", "base", "swept", "grid", "series", "methods", "rate_method", "threads", "out"},
                       "top level");

        SweepJob job;
        try
        {
            if (doc.contains("preset"))
                job.spec = preset(text(doc["preset"], "preset"));
            else if (!doc.contains("swept") || !doc.contains("grid"))
                throw ConfigError("config: without a 'preset', both 'swept' and 'grid' are required");

            if (doc.contains("name"))
                job.spec.name = text(doc["name"], "name");
            if (doc.contains("base"))
                parse_base(doc["base"], job.spec.base);
            if (doc.contains("swept"))
                job.spec.swept = axis_from_string(text(doc["swept"], "swept"));
            if (doc.contains("grid"))
                job.spec.grid = parse_grid(doc["grid"]);
            if (doc.contains("series"))
            {
                const json &s = doc["series"];
                if (s.is_null())
                {
                    job.spec.series_axis.reset();
                    job.spec.series.clear();
                }
                else
                {
                    if (!s.is_object() || !s.contains("axis") || !s.contains("values"))
                        throw ConfigError("config: 'series' must be null or {\"axis\": ..., \"values\": [...]}");
                    reject_unknown(s, {"axis", "values"}, "series");
                    job.spec.series_axis = axis_from_string(text(s["axis"], "series.axis"));
                    job.spec.series = number_list(s["values"], "series.values");
                }
            }
            if (doc.contains("methods"))
                job.spec.methods = parse_methods(doc["methods"]);
            if (doc.contains("rate_method"))
                job.spec.rate_method = method_from_string(text(doc["rate_method"], "rate_method"));
            if (doc.contains("threads"))
            {
                const json &t = doc["threads"];
                if (!t.is_number_integer() || t.get<long long>() < 0)
                    throw ConfigError("config: 'threads' must be a non-negative integer");
                job.threads = unsigned(t.get<long long>());
            }
            if (doc.contains("out"))
                job.out = text(doc["out"], "out");

            job.spec.validate();
        }
        catch (const ConfigError &)
        {
            throw;
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError(std::string("config: ") + e.what());
        }
        return job;
    }

    SweepJob load_sweep_config(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw IoError("cannot read config file '" + path.string() + "'");
        const std::string content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        return parse_sweep_config(content);
    }
}
