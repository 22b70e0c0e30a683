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

#include "mixfield/array_geometry.hpp"

namespace mixfield
{
    // Power-domain budget of the two-user downlink. All values linear.
    // The transmitted symbols and receiver noise of the signal model only enter through
    // their powers: x_near -> p_near, x_far -> p_far, z0 -> noise.
    struct LinkBudget
    {
        double p_near = 0.0;   // NU transmit power [W]
        double p_far = 0.0;    // FU transmit power [W]
        double beta_ref = 0.0; // reference channel gain at 1 m (linear)
        double noise = 0.0;    // sigma^2 [W]

        // Throws std::invalid_argument unless every field is finite and strictly positive.
        void validate() const;

        static LinkBudget from_db(double p_near_dbm, double p_far_dbm, double beta_db, double noise_dbm);
    };

    // N = 256 @ 30 GHz, beta = -62 dB, P_near = 20 dBm, P_far = 30 dBm, sigma^2 = -70 dBm (NU at r = 3 m)
    LinkBudget default_budget();

    double dbm_to_watts(double dbm);
    double watts_to_dbm(double watts);
    double db_to_linear(double db);
    double linear_to_db(double ratio);

    // g_near = N beta / r^2
    double channel_gain_near(const LinkBudget &link, const ArrayConfig &cfg, double r);

    // P_near g_near / (P_far g_near f^2 + sigma^2)
    double sinr_near(const LinkBudget &link, const ArrayConfig &cfg, double r, double f);

    // log2(1 + SINR), and the interference-free value (f = 0)
    double rate_near(const LinkBudget &link, const ArrayConfig &cfg, double r, double f);
    double rate_ideal(const LinkBudget &link, const ArrayConfig &cfg, double r);

    // rate_ideal - rate_near, evaluated in the cancellation-free form log2(1 + snr inr / (inr + snr + 1)).
    double rate_loss(const LinkBudget &link, const ArrayConfig &cfg, double r, double f);

    // log2(1 + snr * P_far f^2 / (P_far f^2 + P_near)); always >= rate_loss.
    double rate_loss_bound(const LinkBudget &link, const ArrayConfig &cfg, double r, double f);

    struct RateReport
    {
        double g_near = 0.0;
        double sinr = 0.0;
        double rate = 0.0;
        double rate_ideal = 0.0;
        double rate_loss = 0.0;
        double rate_loss_bound = 0.0;
        double f_used = 0.0;
    };

    RateReport rate_report(const LinkBudget &link, const ArrayConfig &cfg, double r, double f);
}
