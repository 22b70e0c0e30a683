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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixfield/array_geometry.hpp"
#include "mixfield/interference.hpp"

namespace mixfield
{
    // Parameters a sweep can vary. AngleDiff sets psi = theta - delta with theta held fixed.
    // Beta1/Beta2 sweep the coherence function G directly (no physical scenario).
    enum class Axis
    {
        NAntennas,
        Psi,
        Theta,
        Distance,
        AngleDiff,
        Beta1,
        Beta2
    };

    std::string_view to_string(Axis axis);    // "n_antennas", "psi", "theta", "r", "angle_diff", "beta1", "beta2"
    Axis axis_from_string(std::string_view name);

    // One operating point, with the budget kept in dB units as it appears in configs.
    struct Scenario
    {
        int n_antennas = 256;
        double carrier_freq = 30e9; // [Hz]
        double p_near_dbm = 20.0;
        double p_far_dbm = 30.0;
        double beta_db = -62.0;
        double noise_dbm = -70.0;
        double theta = 0.0;
        double psi = 0.0;
        double r = 3.0;
        double angle_diff = 0.0; // theta - psi, only consulted when an axis is AngleDiff
        double beta1 = 0.0;      // only consulted for G-surface sweeps
        double beta2 = 1.0;

        bool operator==(const Scenario &) const = default;
    };

    struct MethodSet
    {
        bool exact = true;
        bool fresnel_sum = true;
        bool closed_form = true;

        bool contains(Method m) const;
        bool empty() const { return !(exact || fresnel_sum || closed_form); }
        bool operator==(const MethodSet &) const = default;
    };

    struct SweepSpec
    {
        std::string name;
        Scenario base;
        Axis swept = Axis::NAntennas;
        std::vector<double> grid;         // non-empty, strictly monotone
        std::optional<Axis> series_axis;  // optional second axis, one curve per value
        std::vector<double> series;
        MethodSet methods;
        Method rate_method = Method::Exact; // which f feeds the power/SINR/rate columns

        // Throws std::invalid_argument on an empty or non-monotone grid, a series axis equal to the
        // swept axis, a method set that does not contain rate_method, or inconsistent G-surface axes.
        void validate() const;

        bool is_surface() const; // Beta1/Beta2 sweep

        bool operator==(const SweepSpec &) const = default;
    };

    // One CSV row. Empty optionals serialize as empty fields.
    struct SweepRecord
    {
        double swept_value = 0.0;
        std::optional<double> series_value;
        std::optional<int> n_antennas;
        std::optional<double> theta;
        std::optional<double> psi;
        std::optional<double> r;
        std::optional<double> beta1;
        std::optional<double> beta2;
        std::optional<double> f_exact;
        std::optional<double> f_sum;
        std::optional<double> f_closed;
        std::optional<double> interference_power_dbm;
        std::optional<double> sinr_db;
        std::optional<double> rate;
        std::optional<double> rate_ideal;
        std::optional<double> rate_loss;
        std::optional<double> rate_loss_bound;
        std::optional<FieldRegion> region;
        std::optional<bool> approx_domain_warning;

        bool operator==(const SweepRecord &) const = default;
    };

    // Scenario with the swept/series values applied (psi resolved from angle_diff when relevant).
    Scenario resolve_point(const SweepSpec &spec, double swept_value, std::optional<double> series_value);

    SweepRecord evaluate_point(const SweepSpec &spec, double swept_value, std::optional<double> series_value);

    // Rows are ordered series-major: every grid value for series[0], then series[1], ...
    // threads == 0 picks std::thread::hardware_concurrency(). Output does not depend on threads.
    std::vector<SweepRecord> run_sweep(const SweepSpec &spec, unsigned threads = 1);

    // count points from start to stop inclusive
    std::vector<double> linspace(double start, double stop, std::size_t count);
    // start, start + step, ... up to stop (inclusive within 1e-9 step)
    std::vector<double> arange_inclusive(double start, double stop, double step);
}
