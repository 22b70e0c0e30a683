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

#include "mixfield/link_rate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mixfield
{
    namespace
    {
        // SINR values this small are rounding noise; the rate is reported as exactly zero.
        constexpr double kMinRatio = 1e-15;

        double log2_1p(double x)
        {
            if (x < kMinRatio)
                return 0.0;
            return std::log1p(x) / std::numbers::ln2;
        }

        void check_f(double f)
        {
            if (!std::isfinite(f) || f < 0.0)
                throw std::invalid_argument("normalized interference f must be finite and non-negative");
        }

        struct PowerRatios
        {
            double snr; // P_near g / sigma^2
            double inr; // P_far g f^2 / sigma^2
        };

        PowerRatios ratios(const LinkBudget &link, const ArrayConfig &cfg, double r, double f)
        {
            check_f(f);
            const double g = channel_gain_near(link, cfg, r);
            return {link.p_near * g / link.noise, link.p_far * g * f * f / link.noise};
        }
    }

    void LinkBudget::validate() const
    {
        const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
        if (!positive(p_near) || !positive(p_far) || !positive(beta_ref) || !positive(noise))
            throw std::invalid_argument("LinkBudget: powers, reference gain and noise must be positive and finite");
    }

    LinkBudget LinkBudget::from_db(double p_near_dbm, double p_far_dbm, double beta_db, double noise_dbm)
    {
        LinkBudget link{dbm_to_watts(p_near_dbm), dbm_to_watts(p_far_dbm), db_to_linear(beta_db), dbm_to_watts(noise_dbm)};
        link.validate();
        return link;
    }

    LinkBudget default_budget()
    {
        return LinkBudget::from_db(20.0, 30.0, -62.0, -70.0);
    }

    double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
    double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }
    double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

    double channel_gain_near(const LinkBudget &link, const ArrayConfig &cfg, double r)
    {
        if (!std::isfinite(r) || r <= 0.0)
            throw std::invalid_argument("channel_gain_near: distance must be positive and finite");
        return double(cfg.n_antennas) * link.beta_ref / (r * r);
    }

    double sinr_near(const LinkBudget &link, const ArrayConfig &cfg, double r, double f)
    {
        check_f(f);
        const double g = channel_gain_near(link, cfg, r);
        return link.p_near * g / (link.p_far * g * f * f + link.noise);
    }

    double rate_near(const LinkBudget &link, const ArrayConfig &cfg, double r, double f)
    {
        return log2_1p(sinr_near(link, cfg, r, f));
    }

    double rate_ideal(const LinkBudget &link, const ArrayConfig &cfg, double r)
    {
        return rate_near(link, cfg, r, 0.0);
    }

    // R* - R = log2((1 + snr)(1 + inr) / (1 + inr + snr)) = log2(1 + snr inr / (inr + snr + 1))
    double rate_loss(const LinkBudget &link, const ArrayConfig &cfg, double r, double f)
    {
        const auto [snr, inr] = ratios(link, cfg, r, f);
        return log2_1p(snr * inr / (inr + snr + 1.0));
    }

    // Same expression with the sigma^4 term (the trailing 1) dropped from the denominator.
    double rate_loss_bound(const LinkBudget &link, const ArrayConfig &cfg, double r, double f)
    {
        const auto [snr, inr] = ratios(link, cfg, r, f);
        if (inr == 0.0)
            return 0.0;
        return log2_1p(snr * inr / (inr + snr));
    }

    RateReport rate_report(const LinkBudget &link, const ArrayConfig &cfg, double r, double f)
    {
        link.validate();
        RateReport rep;
        rep.f_used = f;
        rep.g_near = channel_gain_near(link, cfg, r);
        rep.sinr = sinr_near(link, cfg, r, f);
        rep.rate = rate_near(link, cfg, r, f);
        rep.rate_ideal = rate_ideal(link, cfg, r);
        rep.rate_loss = rate_loss(link, cfg, r, f);
        rep.rate_loss_bound = rate_loss_bound(link, cfg, r, f);
        return rep;
    }
}
