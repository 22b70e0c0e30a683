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

#include "cli.hpp"

#include <iostream>
#include <optional>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include "mixfield/mixfield.hpp"

namespace mixfield::cli
{
    namespace
    {
        // Flags shared by the single-point commands.
        struct PointOptions
        {
            int n_antennas = 256;
            double carrier_freq = 30e9;
            double theta = 0.0;
            double psi = 0.0;
            double r = 3.0;
            double p_near_dbm = 20.0;
            double p_far_dbm = 30.0;
            double beta_db = -62.0;
            double noise_dbm = -70.0;
            std::string method = "exact";
        };

        void add_geometry(CLI::App *cmd, PointOptions &o)
        {
            cmd->add_option("--n", o.n_antennas, "number of BS antennas N")->capture_default_str();
            cmd->add_option("--freq", o.carrier_freq, "carrier frequency [Hz]")->capture_default_str();
            cmd->add_option("--theta", o.theta, "NU spatial angle theta in (-1, 1)")->capture_default_str();
            cmd->add_option("--psi", o.psi, "FU spatial angle psi in (-1, 1)")->capture_default_str();
            cmd->add_option("--r", o.r, "NU distance [m]")->capture_default_str();
        }

        void add_budget(CLI::App *cmd, PointOptions &o)
        {
            cmd->add_option("--p-near-dbm", o.p_near_dbm, "NU transmit power [dBm]")->capture_default_str();
            cmd->add_option("--p-far-dbm", o.p_far_dbm, "FU transmit power [dBm]")->capture_default_str();
            cmd->add_option("--beta-db", o.beta_db, "reference channel gain at 1 m [dB]")->capture_default_str();
            cmd->add_option("--noise-dbm", o.noise_dbm, "noise power [dBm]")->capture_default_str();
        }

        void line(std::ostream &out, const char *key, double value)
        {
            out << key << ": " << format_double(value) << '\n';
        }

        void cmd_interference(const PointOptions &o, std::ostream &out)
        {
            const ArrayConfig cfg = make_array_config(o.n_antennas, o.carrier_freq);
            const FarFieldDirection dir{o.psi};
            const NearFieldPoint p{o.theta, o.r};
            const BetaParams bp = beta_params(cfg, dir, p);

            out << "n_antennas: " << cfg.n_antennas << '\n';
            line(out, "wavelength", cfg.wavelength);
            line(out, "aperture", cfg.aperture);
            line(out, "rayleigh_distance", cfg.rayleigh_distance);
            line(out, "approx_valid_distance", cfg.approx_valid_distance);
            line(out, "beta1", bp.beta1);
            line(out, "beta2", bp.beta2);
            line(out, "f_exact", interference_exact(cfg, dir, p));
            line(out, "f_sum", interference_fresnel_sum(cfg, dir, p));
            line(out, "f_closed", g_function(bp));
            out << "region: " << to_string(classify_region(cfg, o.r)) << '\n';
            out << "approx_domain_warning: " << (below_approx_validity(cfg, o.r) ? "true" : "false") << '\n';
        }

        void cmd_rate(const PointOptions &o, std::ostream &out)
        {
            const ArrayConfig cfg = make_array_config(o.n_antennas, o.carrier_freq);
            const LinkBudget link = LinkBudget::from_db(o.p_near_dbm, o.p_far_dbm, o.beta_db, o.noise_dbm);
            const Method method = method_from_string(o.method);
            const double f = interference(cfg, FarFieldDirection{o.psi}, NearFieldPoint{o.theta, o.r}, method);
            const RateReport rep = rate_report(link, cfg, o.r, f);

            out << "method: " << to_string(method) << '\n';
            line(out, "f_used", rep.f_used);
            line(out, "g_near", rep.g_near);
            line(out, "sinr", rep.sinr);
            line(out, "sinr_db", linear_to_db(rep.sinr));
            line(out, "rate", rep.rate);
            line(out, "rate_ideal", rep.rate_ideal);
            line(out, "rate_loss", rep.rate_loss);
            line(out, "rate_loss_bound", rep.rate_loss_bound);
        }

        struct SweepOptions
        {
            std::string preset_name;
            std::string config_path;
            std::string out_path;
            std::optional<unsigned> threads;
            std::optional<std::string> rate_method;
            std::optional<int> n_antennas;
            std::optional<double> carrier_freq, theta, psi, r, p_near_dbm, p_far_dbm, beta_db, noise_dbm;
        };

        int cmd_sweep(const SweepOptions &o, std::ostream &out)
        {
            SweepJob job;
            if (!o.config_path.empty())
                job = load_sweep_config(o.config_path);
            else
                job.spec = preset(o.preset_name);

            // flags > file > preset defaults
            Scenario &b = job.spec.base;
            if (o.n_antennas) b.n_antennas = *o.n_antennas;
            if (o.carrier_freq) b.carrier_freq = *o.carrier_freq;
            if (o.theta) b.theta = *o.theta;
            if (o.psi) b.psi = *o.psi;
            if (o.r) b.r = *o.r;
            if (o.p_near_dbm) b.p_near_dbm = *o.p_near_dbm;
            if (o.p_far_dbm) b.p_far_dbm = *o.p_far_dbm;
            if (o.beta_db) b.beta_db = *o.beta_db;
            if (o.noise_dbm) b.noise_dbm = *o.noise_dbm;
            if (o.rate_method) job.spec.rate_method = method_from_string(*o.rate_method);
            if (o.threads) job.threads = *o.threads;
            if (!o.out_path.empty()) job.out = o.out_path;

            const auto records = run_sweep(job.spec, job.threads);
            if (job.out && *job.out != "-")
                emit_csv(records, *job.out);
            else
                write_csv(out, records);
            return kOk;
        }
    }

    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"mixfield: inter-user interference in mixed near-/far-field XL-array links"};
        app.name(args.empty() ? "mixfield" : args.front());
        app.require_subcommand(1);

        PointOptions point;
        auto *interf = app.add_subcommand("interference", "normalized interference at one point, all three methods");
        add_geometry(interf, point);

        auto *rate = app.add_subcommand("rate", "SINR, achievable rate and rate loss at one point");
        add_geometry(rate, point);
        add_budget(rate, point);
        rate->add_option("--method", point.method, "exact | fresnel_sum | closed_form")->capture_default_str();

        SweepOptions sw;
        auto *sweep = app.add_subcommand("sweep", "run a parameter sweep and emit CSV");
        auto *opt_preset = sweep->add_option("--preset", sw.preset_name, "preset name (see list-presets)");
        auto *opt_config = sweep->add_option("--config", sw.config_path, "JSON sweep description");
        opt_preset->excludes(opt_config);
        sweep->add_option("--out", sw.out_path, "output CSV path ('-' or omitted: stdout)");
        sweep->add_option("--threads", sw.threads, "worker threads (0 = hardware concurrency)");
        sweep->add_option("--rate-method", sw.rate_method, "method feeding the power and rate columns");
        sweep->add_option("--n", sw.n_antennas, "override base N");
        sweep->add_option("--freq", sw.carrier_freq, "override base carrier frequency [Hz]");
        sweep->add_option("--theta", sw.theta, "override base theta");
        sweep->add_option("--psi", sw.psi, "override base psi");
        sweep->add_option("--r", sw.r, "override base r [m]");
        sweep->add_option("--p-near-dbm", sw.p_near_dbm, "override NU power [dBm]");
        sweep->add_option("--p-far-dbm", sw.p_far_dbm, "override FU power [dBm]");
        sweep->add_option("--beta-db", sw.beta_db, "override reference gain [dB]");
        sweep->add_option("--noise-dbm", sw.noise_dbm, "override noise power [dBm]");

        double x = 0.0;
        auto *fres = app.add_subcommand("fresnel", "Fresnel integrals C(x), S(x)");
        fres->add_option("--x", x, "argument")->required();

        auto *list = app.add_subcommand("list-presets", "list sweep presets");

        std::vector<const char *> argv;
        argv.reserve(args.size() + 1);
        for (const auto &a : args)
            argv.push_back(a.c_str());
        if (argv.empty())
            argv.push_back("mixfield");

        try
        {
            app.parse(int(argv.size()), argv.data());
        }
        catch (const CLI::CallForHelp &e)
        {
            return app.exit(e, out, err);
        }
        catch (const CLI::CallForAllHelp &e)
        {
            return app.exit(e, out, err);
        }
        catch (const CLI::ParseError &e)
        {
            app.exit(e, out, err);
            return kInvalidArguments;
        }

        try
        {
            if (*interf)
                cmd_interference(point, out);
            else if (*rate)
                cmd_rate(point, out);
            else if (*sweep)
            {
                if (sw.preset_name.empty() && sw.config_path.empty())
                {
                    err << "sweep: one of --preset or --config is required\n";
                    return kInvalidArguments;
                }
                return cmd_sweep(sw, out);
            }
            else if (*fres)
            {
                const FresnelPair cs = fresnel(x);
                line(out, "C", cs.c);
                line(out, "S", cs.s);
            }
            else if (*list)
            {
                for (Preset p : all_presets())
                    out << to_string(p) << "\t" << describe(p) << '\n';
            }
        }
        catch (const IoError &e)
        {
            err << "error: " << e.what() << '\n';
            return kIoFailure;
        }
        catch (const std::invalid_argument &e)
        {
            err << "error: " << e.what() << '\n';
            return kInvalidArguments;
        }
        catch (const std::out_of_range &e)
        {
            err << "error: " << e.what() << '\n';
            return kInvalidArguments;
        }
        return kOk;
    }
}
