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

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "mixfield/fresnel.hpp"
#include "mixfield/interference.hpp"
#include "mixfield/link_rate.hpp"
#include "mixfield/sweep.hpp"

using namespace mixfield;

namespace
{
    SweepSpec small_spec()
    {
        SweepSpec s;
        s.name = "small";
        s.base.theta = 0.05;
        s.swept = Axis::NAntennas;
        s.grid = {64.0, 128.0, 256.0};
        s.series_axis = Axis::Distance;
        s.series = {3.0, 9.0};
        return s;
    }
}

TEST(Sweep, AxisNames)
{
    for (auto a : {Axis::NAntennas, Axis::Psi, Axis::Theta, Axis::Distance, Axis::AngleDiff, Axis::Beta1, Axis::Beta2})
        EXPECT_EQ(axis_from_string(to_string(a)), a);
    EXPECT_EQ(to_string(Axis::Distance), "r");
    EXPECT_THROW(axis_from_string("phi"), std::invalid_argument);
}

TEST(Sweep, SinglePointMatchesDirectCalls)
{
    SweepSpec s;
    s.name = "one";
    s.base.theta = 0.05;
    s.swept = Axis::Psi;
    s.grid = {0.0};
    const auto rows = run_sweep(s);
    ASSERT_EQ(rows.size(), 1u);
    const auto &rec = rows[0];

    const auto cfg = make_array_config(256, 30e9);
    const auto link = default_budget();
    const NearFieldPoint p{0.05, 3.0};
    const double f = interference_exact(cfg, {0.0}, p);
    EXPECT_EQ(rec.swept_value, 0.0);
    EXPECT_FALSE(rec.series_value);
    EXPECT_EQ(rec.n_antennas, 256);
    EXPECT_EQ(rec.f_exact, f);
    EXPECT_EQ(rec.f_sum, interference_fresnel_sum(cfg, {0.0}, p));
    EXPECT_EQ(rec.f_closed, interference_approx(cfg, {0.0}, p));
    EXPECT_EQ(rec.rate_loss, rate_loss(link, cfg, 3.0, f));
    EXPECT_EQ(rec.rate_loss_bound, rate_loss_bound(link, cfg, 3.0, f));
    EXPECT_NEAR(*rec.interference_power_dbm, watts_to_dbm(received_interference_power(link, cfg, {0.0}, p, Method::Exact)), 1e-12);
    EXPECT_NEAR(*rec.sinr_db, linear_to_db(sinr_near(link, cfg, 3.0, f)), 1e-12);
    EXPECT_EQ(rec.region, FieldRegion::NearField);
    EXPECT_EQ(rec.approx_domain_warning, true);
}

TEST(Sweep, RateMethodSelectsF)
{
    auto s = small_spec();
    s.rate_method = Method::ClosedForm;
    const auto rows = run_sweep(s);
    const auto cfg = make_array_config(64, 30e9);
    EXPECT_EQ(rows[0].rate_loss, rate_loss(default_budget(), cfg, 3.0, *rows[0].f_closed));
}

TEST(Sweep, SeriesMajorOrder)
{
    const auto rows = run_sweep(small_spec());
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0].series_value, 3.0);
    EXPECT_EQ(rows[2].series_value, 3.0);
    EXPECT_EQ(rows[3].series_value, 9.0);
    EXPECT_EQ(rows[3].swept_value, 64.0);
    EXPECT_EQ(rows[5].r, 9.0);
    EXPECT_EQ(rows[5].n_antennas, 256);
}

TEST(Sweep, ParallelMatchesSerial)
{
    const auto spec = small_spec();
    const auto serial = run_sweep(spec, 1);
    for (unsigned t : {2u, 3u, 8u, 0u})
        EXPECT_EQ(run_sweep(spec, t), serial) << t;
}

TEST(Sweep, AngleDifferenceAxis)
{
    SweepSpec s;
    s.name = "diff";
    s.base.theta = 0.25;
    s.swept = Axis::AngleDiff;
    s.grid = {0.0, 0.125};
    const auto rows = run_sweep(s);
    EXPECT_EQ(rows[1].psi, 0.125);
    EXPECT_EQ(rows[1].theta, 0.25);
    EXPECT_EQ(resolve_point(s, 0.125, std::nullopt).psi, 0.125);
}

TEST(Sweep, GSurface)
{
    SweepSpec s;
    s.name = "g";
    s.swept = Axis::Beta1;
    s.grid = {-1.0, 0.0, 1.0};
    s.series_axis = Axis::Beta2;
    s.series = {0.5, 2.0};
    s.methods = {false, false, true};
    s.rate_method = Method::ClosedForm;
    const auto rows = run_sweep(s);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[4].f_closed, g_function({0.0, 2.0}));
    EXPECT_FALSE(rows[4].f_exact);
    EXPECT_FALSE(rows[4].n_antennas);
    EXPECT_FALSE(rows[4].rate);
    EXPECT_EQ(rows[0].f_closed, rows[2].f_closed);
}

TEST(Sweep, Validation)
{
    auto s = small_spec();
    s.grid.clear();
    EXPECT_THROW(run_sweep(s), std::invalid_argument);

    s = small_spec();
    s.grid = {64.0, 64.0};
    EXPECT_THROW(run_sweep(s), std::invalid_argument);

    s = small_spec();
    s.series_axis = Axis::NAntennas;
    EXPECT_THROW(run_sweep(s), std::invalid_argument);

    s = small_spec();
    s.methods = {false, false, false};
    EXPECT_THROW(run_sweep(s), std::invalid_argument);

    s = small_spec();
    s.methods = {false, true, true};
    EXPECT_THROW(run_sweep(s), std::invalid_argument); // rate_method Exact not selected

    s = small_spec();
    s.grid = {64.5};
    EXPECT_THROW(run_sweep(s), std::invalid_argument);

    s = small_spec();
    s.swept = Axis::Psi;
    s.grid = {0.5, 1.0};
    EXPECT_THROW(run_sweep(s), std::invalid_argument);

    s = small_spec();
    s.swept = Axis::AngleDiff;
    s.base.theta = 0.5;
    s.grid = {0.0, 1.6};
    EXPECT_THROW(run_sweep(s), std::invalid_argument);
}

TEST(Sweep, Linspace)
{
    const auto g = linspace(-0.5, 0.5, 601);
    ASSERT_EQ(g.size(), 601u);
    EXPECT_EQ(g.front(), -0.5);
    EXPECT_EQ(g.back(), 0.5);
    EXPECT_EQ(g[300], 0.0);
    for (std::size_t i = 0; i < g.size(); ++i)
        EXPECT_EQ(g[i], -g[g.size() - 1 - i]);
    EXPECT_EQ(linspace(2.0, 5.0, 1), std::vector<double>{2.0});
}

TEST(Sweep, ArangeInclusive)
{
    const auto g = arange_inclusive(16.0, 1024.0, 16.0);
    ASSERT_EQ(g.size(), 64u);
    EXPECT_EQ(g.back(), 1024.0);
    EXPECT_THROW(arange_inclusive(0.0, 1.0, -1.0), std::invalid_argument);
    EXPECT_THROW(arange_inclusive(0.0, 1.0, 0.0), std::invalid_argument);
}
