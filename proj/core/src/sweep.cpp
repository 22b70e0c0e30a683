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

#include "mixfield/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "mixfield/fresnel.hpp"
#include "mixfield/link_rate.hpp"
#include "mixfield/steering.hpp"

namespace mixfield
{
    namespace
    {
        bool is_beta_axis(Axis axis)
        {
            return axis == Axis::Beta1 || axis == Axis::Beta2;
        }

        void check_values(const std::vector<double> &values, Axis axis, const char *what)
        {
            for (double v : values)
            {
                if (!std::isfinite(v))
                    throw std::invalid_argument(std::string(what) + ": values must be finite");
                if (axis == Axis::NAntennas && (v < 1.0 || v != std::round(v) ||
                                                v > double(std::numeric_limits<int>::max())))
                    throw std::invalid_argument(std::string(what) + ": n_antennas values must be positive integers");
            }
        }

        void apply(Axis axis, double value, Scenario &s)
        {
            switch (axis)
            {
            case Axis::NAntennas:
                s.n_antennas = int(std::lround(value));
                break;
            case Axis::Psi:
                s.psi = value;
                break;
            case Axis::Theta:
                s.theta = value;
                break;
            case Axis::Distance:
                s.r = value;
                break;
            case Axis::AngleDiff:
                s.angle_diff = value;
                break;
            case Axis::Beta1:
                s.beta1 = value;
                break;
            case Axis::Beta2:
                s.beta2 = value;
                break;
            }
        }

        std::optional<double> pick(const SweepRecord &rec, Method m)
        {
            switch (m)
            {
            case Method::Exact:
                return rec.f_exact;
            case Method::FresnelSum:
                return rec.f_sum;
            case Method::ClosedForm:
                return rec.f_closed;
            }
            return std::nullopt;
        }

        struct GridPoint
        {
            double swept;
            std::optional<double> series;
        };

        std::vector<GridPoint> enumerate(const SweepSpec &spec)
        {
            std::vector<GridPoint> points;
            if (spec.series_axis)
            {
                points.reserve(spec.series.size() * spec.grid.size());
                for (double sv : spec.series)
                    for (double gv : spec.grid)
                        points.push_back({gv, sv});
            }
            else
            {
                points.reserve(spec.grid.size());
                for (double gv : spec.grid)
                    points.push_back({gv, std::nullopt});
            }
            return points;
        }

        void check_point(const SweepSpec &spec, const Scenario &s)
        {
            if (spec.is_surface())
            {
                if (!(s.beta2 > 0.0))
                    throw std::invalid_argument("sweep: beta2 must be positive");
                return;
            }
            validate(FarFieldDirection{s.psi});
            validate(NearFieldPoint{s.theta, s.r});
            if (s.n_antennas < 1)
                throw std::invalid_argument("sweep: n_antennas must be >= 1");
        }
    }

    std::string_view to_string(Axis axis)
    {
        switch (axis)
        {
        case Axis::NAntennas:
            return "n_antennas";
        case Axis::Psi:
            return "psi";
        case Axis::Theta:
            return "theta";
        case Axis::Distance:
            return "r";
        case Axis::AngleDiff:
            return "angle_diff";
        case Axis::Beta1:
            return "beta1";
        case Axis::Beta2:
            return "beta2";
        }
        return "unknown";
    }

    Axis axis_from_string(std::string_view name)
    {
        for (Axis a : {Axis::NAntennas, Axis::Psi, Axis::Theta, Axis::Distance, Axis::AngleDiff, Axis::Beta1, Axis::Beta2})
            if (name == to_string(a))
                return a;
        throw std::invalid_argument("unknown sweep axis '" + std::string(name) + "'");
    }

    bool MethodSet::contains(Method m) const
    {
        switch (m)
        {
        case Method::Exact:
            return exact;
        case Method::FresnelSum:
            return fresnel_sum;
        case Method::ClosedForm:
            return closed_form;
        }
        return false;
    }

    bool SweepSpec::is_surface() const
    {
        return is_beta_axis(swept);
    }

    void SweepSpec::validate() const
    {
        if (grid.empty())
            throw std::invalid_argument("sweep '" + name + "': grid is empty");
        check_values(grid, swept, "grid");
        if (grid.size() > 1)
        {
            const bool increasing = grid[1] > grid[0];
            for (std::size_t i = 1; i < grid.size(); ++i)
                if (increasing ? !(grid[i] > grid[i - 1]) : !(grid[i] < grid[i - 1]))
                    throw std::invalid_argument("sweep '" + name + "': grid must be strictly monotone");
        }

        if (series_axis)
        {
            if (*series_axis == swept)
                throw std::invalid_argument("sweep '" + name + "': series axis must differ from the swept axis");
            if (series.empty())
                throw std::invalid_argument("sweep '" + name + "': series axis given without values");
            check_values(series, *series_axis, "series");
        }
        else if (!series.empty())
        {
            throw std::invalid_argument("sweep '" + name + "': series values given without a series axis");
        }

        if (methods.empty())
            throw std::invalid_argument("sweep '" + name + "': no evaluation method selected");

        if (is_surface())
        {
            if (series_axis && !is_beta_axis(*series_axis))
                throw std::invalid_argument("sweep '" + name + "': a beta sweep can only be paired with the other beta axis");
            if (methods.exact || methods.fresnel_sum)
                throw std::invalid_argument("sweep '" + name + "': beta sweeps only support the closed_form method");
        }
        else
        {
            if (series_axis && is_beta_axis(*series_axis))
                throw std::invalid_argument("sweep '" + name + "': beta series require a beta swept axis");
            if (!methods.contains(rate_method))
                throw std::invalid_argument("sweep '" + name + "': rate_method must be one of the selected methods");
        }
    }

    Scenario resolve_point(const SweepSpec &spec, double swept_value, std::optional<double> series_value)
    {
        Scenario s = spec.base;
        apply(spec.swept, swept_value, s);
        if (spec.series_axis && series_value)
            apply(*spec.series_axis, *series_value, s);
        if (spec.swept == Axis::AngleDiff || spec.series_axis == Axis::AngleDiff)
            s.psi = s.theta - s.angle_diff;
        return s;
    }

    SweepRecord evaluate_point(const SweepSpec &spec, double swept_value, std::optional<double> series_value)
    {
        const Scenario s = resolve_point(spec, swept_value, series_value);
        check_point(spec, s);

        SweepRecord rec;
        rec.swept_value = swept_value;
        rec.series_value = spec.series_axis ? series_value : std::nullopt;

        if (spec.is_surface())
        {
            rec.beta1 = s.beta1;
            rec.beta2 = s.beta2;
            rec.f_closed = g_function(BetaParams{s.beta1, s.beta2});
            return rec;
        }

        const ArrayConfig cfg = make_array_config(s.n_antennas, s.carrier_freq);
        const LinkBudget link = LinkBudget::from_db(s.p_near_dbm, s.p_far_dbm, s.beta_db, s.noise_dbm);
        const FarFieldDirection dir{s.psi};
        const NearFieldPoint p{s.theta, s.r};

        rec.n_antennas = s.n_antennas;
        rec.theta = s.theta;
        rec.psi = s.psi;
        rec.r = s.r;

        const BetaParams bp = beta_params(cfg, dir, p);
        rec.beta1 = bp.beta1;
        rec.beta2 = bp.beta2;

        if (spec.methods.exact)
            rec.f_exact = interference_exact(cfg, dir, p);
        if (spec.methods.fresnel_sum)
            rec.f_sum = interference_fresnel_sum(cfg, dir, p);
        if (spec.methods.closed_form)
            rec.f_closed = g_function(bp);

        const double f = *pick(rec, spec.rate_method);
        const RateReport rep = rate_report(link, cfg, s.r, f);
        const double power = link.p_far * rep.g_near * f * f;
        rec.interference_power_dbm = power > 0.0 ? watts_to_dbm(power) : -std::numeric_limits<double>::infinity();
        rec.sinr_db = linear_to_db(rep.sinr);
        rec.rate = rep.rate;
        rec.rate_ideal = rep.rate_ideal;
        rec.rate_loss = rep.rate_loss;
        rec.rate_loss_bound = rep.rate_loss_bound;
        rec.region = classify_region(cfg, s.r);
        rec.approx_domain_warning = below_approx_validity(cfg, s.r);
        return rec;
    }

    std::vector<SweepRecord> run_sweep(const SweepSpec &spec, unsigned threads)
    {
        spec.validate();
        const std::vector<GridPoint> points = enumerate(spec);
        for (const GridPoint &gp : points)
            check_point(spec, resolve_point(spec, gp.swept, gp.series));

        std::vector<SweepRecord> records(points.size());
        if (threads == 0)
            threads = std::max(1u, std::thread::hardware_concurrency());
        threads = unsigned(std::min<std::size_t>(threads, points.size()));

        if (threads <= 1)
        {
            for (std::size_t i = 0; i < points.size(); ++i)
                records[i] = evaluate_point(spec, points[i].swept, points[i].series);
            return records;
        }

        // Strided partition; each worker writes only its own slots.
        std::vector<std::exception_ptr> errors(threads);
        {
            std::vector<std::jthread> workers;
            workers.reserve(threads);
            for (unsigned w = 0; w < threads; ++w)
            {
                workers.emplace_back([&, w] {
                    try
                    {
                        for (std::size_t i = w; i < points.size(); i += threads)
                            records[i] = evaluate_point(spec, points[i].swept, points[i].series);
                    }
                    catch (...)
                    {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (const auto &e : errors)
            if (e)
                std::rethrow_exception(e);
        return records;
    }

    std::vector<double> linspace(double start, double stop, std::size_t count)
    {
        if (count == 0)
            return {};
        if (count == 1)
            return {start};
        // The upper half is measured back from stop, so a range symmetric about zero yields exact mirror pairs.
        std::vector<double> out(count);
        const double step = (stop - start) / double(count - 1);
        for (std::size_t i = 0; i < count; ++i)
            out[i] = 2 * i < count ? start + double(i) * step : stop - double(count - 1 - i) * step;
        return out;
    }

    std::vector<double> arange_inclusive(double start, double stop, double step)
    {
        if (!(step != 0.0) || !std::isfinite(step) || (stop - start) / step < 0.0)
            throw std::invalid_argument("arange_inclusive: step must be non-zero and point from start to stop");
        const auto count = std::size_t(std::floor((stop - start) / step + 1e-9)) + 1;
        std::vector<double> out(count);
        for (std::size_t i = 0; i < count; ++i)
            out[i] = start + double(i) * step;
        return out;
    }
}
