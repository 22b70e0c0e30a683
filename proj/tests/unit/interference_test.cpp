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
#include <random>
#include <stdexcept>

#include "mixfield/fresnel.hpp"
#include "mixfield/interference.hpp"
#include "mixfield/link_rate.hpp"
#include "oracle/geometry_oracle.hpp"

using namespace mixfield;

namespace
{
    const ArrayConfig kArray = make_array_config(256, 30e9);
}

TEST(Interference, SingleAntennaIsOne)
{
    const auto cfg = make_array_config(1, 30e9);
    for (auto m : {Method::Exact, Method::FresnelSum})
        EXPECT_NEAR(interference(cfg, {0.4}, {-0.2, 2.0}, m), 1.0, 1e-15);
    // a single element is the beta2 -> 0 end of the closed form
    EXPECT_NEAR(interference_approx(make_array_config(1, 30e9), {0.1}, {0.1, 50.0}), 1.0, 1e-3);
}

TEST(Interference, FarFieldLimits)
{
    EXPECT_NEAR(interference_exact(kArray, {0.0}, {0.0, 1e6}), 1.0, 1e-6);
    // at 1e6 m the residual quadratic phase (about 1e-4 rad at the array edge) still leaves 2.6e-5
    EXPECT_NEAR(interference_exact(kArray, {2.0 / 256}, {0.0, 1e6}), oracle::correlation(256, 0.01, 0.0, 1e6, 2.0 / 256), 1e-11);
    EXPECT_NEAR(interference_exact(kArray, {2.0 / 256}, {0.0, 1e6}), 0.0, 3e-5);
    EXPECT_NEAR(interference_exact(kArray, {2.0 / 256}, {0.0, 1e8}), 0.0, 1e-6);
}

TEST(Interference, ExactMatchesCoordinateOracle)
{
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> ang(-0.9, 0.9), rr(1.6, 400.0);
    for (int k = 0; k < 60; ++k)
    {
        const double theta = ang(rng), psi = ang(rng), r = rr(rng);
        EXPECT_NEAR(interference_exact(kArray, {psi}, {theta, r}), oracle::correlation(256, 0.01, theta, r, psi), 1e-11);
    }
}

TEST(Interference, SumMatchesCenteredIndexing)
{
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> ang(-0.9, 0.9), rr(1.6, 400.0);
    for (int n_ant : {2, 63, 256, 1024})
    {
        const auto cfg = make_array_config(n_ant, 30e9);
        for (int k = 0; k < 20; ++k)
        {
            const double theta = ang(rng), psi = ang(rng), r = rr(rng);
            EXPECT_NEAR(interference_fresnel_sum(cfg, {psi}, {theta, r}),
                        oracle::centered_fresnel_sum(n_ant, cfg.wavelength, theta, r, psi), 1e-11);
        }
    }
}

TEST(Interference, SumCloseToExactBeyondValidityDistance)
{
    const double exact = interference_exact(kArray, {0.1}, {0.0, 20.0});
    const double sum = interference_fresnel_sum(kArray, {0.1}, {0.0, 20.0});
    EXPECT_FALSE(below_approx_validity(kArray, 20.0));
    EXPECT_LE(std::abs(sum - exact), 5e-3);
    EXPECT_LE(std::abs(sum - exact), 1e-5); // measured 3.2e-6
}

TEST(Interference, ClosedFormIsGOfBetas)
{
    const NearFieldPoint p{0.05, 3.0};
    EXPECT_EQ(interference_approx(kArray, {0.0}, p), g_function(beta_params(kArray, {0.0}, p)));
}

TEST(Interference, DefaultScenarioPoint)
{
    const NearFieldPoint p{0.05, 3.0};
    EXPECT_NEAR(interference_exact(kArray, {0.0}, p), 0.13254723758446896, 1e-12);
    EXPECT_NEAR(interference_fresnel_sum(kArray, {0.0}, p), 0.1343988755031201, 1e-12);
    EXPECT_NEAR(interference_approx(kArray, {0.0}, p), 0.134325092710759108, 1e-12);
}

TEST(Interference, Fig3aGap)
{
    double worst = 0.0;
    for (int n_ant : {64, 128, 256, 512})
        for (double r : {3.0, 9.0})
        {
            const auto cfg = make_array_config(n_ant, 30e9);
            const NearFieldPoint p{0.05, r};
            worst = std::max(worst, std::abs(interference_approx(cfg, {0.0}, p) - interference_exact(cfg, {0.0}, p)));
        }
    EXPECT_LE(worst, 0.05);
    EXPECT_LE(worst, 2.5e-3); // measured 1.78e-3
}

TEST(Interference, ClosedFormSymmetricAboutNearAngle)
{
    for (double theta : {0.0, 0.125, -0.375})
        for (double delta : {0.0078125, 0.0625, 0.25})
            EXPECT_EQ(interference_approx(kArray, {theta + delta}, {theta, 3.0}),
                      interference_approx(kArray, {theta - delta}, {theta, 3.0}));
}

TEST(Interference, ExactBoundedAndMirrorInvariant)
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> ang(-0.95, 0.95), rr(0.5, 1000.0);
    for (int k = 0; k < 200; ++k)
    {
        const double theta = ang(rng), psi = ang(rng), r = rr(rng);
        const double f = interference_exact(kArray, {psi}, {theta, r});
        ASSERT_GE(f, 0.0);
        ASSERT_LE(f, 1.0 + 1e-12);
        ASSERT_NEAR(f, interference_exact(kArray, {-psi}, {-theta, r}), 1e-12);
    }
}

TEST(Interference, SumVersusClosedFormErrorOrdering)
{
    // Both forms share the quadratic phase expansion error, which dominates the extra
    // Riemann-sum step on this grid, so which one lands closer to the exact value is close
    // to a coin flip. Measured: the closed form is the farther one on 127 of 240 points.
    int total = 0, sum_wins = 0;
    for (int n_ant : {128, 256, 512, 1024})
    {
        const auto cfg = make_array_config(n_ant, 30e9);
        for (double theta : {0.0, 0.05, 0.3})
            for (double diff : {0.0, 0.002, 0.01, 0.05, 0.2})
                for (double r : {3.0, 10.0, 30.0, 100.0})
                {
                    const FarFieldDirection dir{theta - diff};
                    const NearFieldPoint p{theta, r};
                    const double exact = interference_exact(cfg, dir, p);
                    ++total;
                    if (std::abs(interference_approx(cfg, dir, p) - exact) >= std::abs(interference_fresnel_sum(cfg, dir, p) - exact))
                        ++sum_wins;
                }
    }
    EXPECT_EQ(total, 240);
    EXPECT_GE(sum_wins, 120) << sum_wins << " / " << total;
}

TEST(Interference, ValidityFlag)
{
    EXPECT_TRUE(below_approx_validity(kArray, 3.0));
    EXPECT_FALSE(below_approx_validity(kArray, 7.25));
}

TEST(Interference, MethodNames)
{
    for (auto m : {Method::Exact, Method::FresnelSum, Method::ClosedForm})
        EXPECT_EQ(method_from_string(to_string(m)), m);
    EXPECT_EQ(method_from_string("closed_form"), Method::ClosedForm);
    EXPECT_THROW(method_from_string("approx"), std::invalid_argument);
}

TEST(Interference, RejectsInvalidGeometry)
{
    EXPECT_THROW(interference_exact(kArray, {1.2}, {0.0, 3.0}), std::invalid_argument);
    EXPECT_THROW(interference_fresnel_sum(kArray, {0.0}, {0.0, -1.0}), std::invalid_argument);
    EXPECT_THROW(interference_approx(kArray, {0.0}, {1.0, 3.0}), std::invalid_argument);
}

TEST(ReceivedInterference, FullCorrelationPower)
{
    const auto link = default_budget();
    // f = 1 at the beam focus of a far-away user
    const double w = received_interference_power(link, kArray, {0.0}, {0.0, 3.0}, Method::Exact);
    EXPECT_GT(w, 0.0);
    const double g = channel_gain_near(link, kArray, 3.0);
    EXPECT_NEAR(link.p_far * g, 1.7947e-5, 1e-9);
    EXPECT_NEAR(watts_to_dbm(link.p_far * g), -17.46, 0.01);
    const double f = interference_exact(kArray, {0.0}, {0.0, 3.0});
    EXPECT_NEAR(w, link.p_far * g * f * f, 1e-20);
}

TEST(ReceivedInterference, ZeroCorrelationIsZeroPower)
{
    // orthogonal far-field beams: f vanishes, and so does the power
    const auto link = default_budget();
    const double w = received_interference_power(link, kArray, {2.0 / 256}, {0.0, 1e9}, Method::Exact);
    EXPECT_NEAR(w, 0.0, 1e-20);
}

TEST(ReceivedInterference, Fig1ExactVersusClosedForm)
{
    // Relative gap between exact and closed-form power over the fig1 preset angle grid.
    // Measured: 0.137 where f_exact > 0.1, 0.338 in the low-level tails.
    const auto link = LinkBudget::from_db(20.0, 30.0, -62.0, -70.0);
    double worst_main = 0.0, worst_all = 0.0;
    for (int i = 0; i <= 600; ++i)
    {
        const double psi = -0.5 + i / 600.0;
        const NearFieldPoint p{0.0, 3.0};
        const double pe = received_interference_power(link, kArray, {psi}, p, Method::Exact);
        const double pc = received_interference_power(link, kArray, {psi}, p, Method::ClosedForm);
        const double rel = std::abs(pc - pe) / pe;
        worst_all = std::max(worst_all, rel);
        if (interference_exact(kArray, {psi}, p) > 0.1)
            worst_main = std::max(worst_main, rel);
    }
    EXPECT_LE(worst_main, 0.15);
    EXPECT_LE(worst_all, 0.35);
}

TEST(Interference, ExactSymmetricAtBroadside)
{
    // With the near user on the array normal the geometry is mirror-symmetric, so the exact
    // correlation is even in psi. Off the normal it is only approximately so.
    for (double r : {3.0, 10.0, 100.0})
        for (int i = 1; i <= 60; ++i)
        {
            const double psi = 0.01 * i;
            ASSERT_NEAR(interference_exact(kArray, {psi}, {0.0, r}), interference_exact(kArray, {-psi}, {0.0, r}), 1e-12);
        }
    EXPECT_GT(std::abs(interference_exact(make_array_config(470, 30e9), {0.115234375}, {-0.203125, 3.32}) -
                       interference_exact(make_array_config(470, 30e9), {-0.521484375}, {-0.203125, 3.32})),
              0.02);
}
