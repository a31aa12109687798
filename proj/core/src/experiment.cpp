// SPDX-License-Identifier: Apache-2.0
//
// mmlink: link-level spectral efficiency simulator for mmWave downlinks
// Copyright (C) 2026 The mmlink authors
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

#include "mmlink/experiment.hpp"

#include "mmlink/csv.hpp"
#include "mmlink/numeric.hpp"
#include "mmlink/svg.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <stdexcept>

#ifndef MMLINK_VERSION
#define MMLINK_VERSION "unknown"
#endif

namespace mmlink {

namespace {

class Writer
{
  public:
    Writer(std::filesystem::path dir, std::vector<std::filesystem::path> &files) : dir_(std::move(dir)), files_(files) {}

    template <class Fn>
    void write(const std::string &name, Fn &&fn)
    {
        const auto path = dir_ / name;
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write '" + path.string() + "'");
        fn(out);
        out.flush();
        if (!out)
            throw std::runtime_error("write to '" + path.string() + "' failed");
        files_.push_back(path);
    }

  private:
    std::filesystem::path dir_;
    std::vector<std::filesystem::path> &files_;
};

void log_line(std::ostream *log, const std::string &msg)
{
    if (log)
        *log << msg << std::endl;
}

} // namespace

std::string_view library_version()
{
    return MMLINK_VERSION;
}

void write_k_grid_csv(std::ostream &os, const SweepResult &sweep)
{
    os << "alpha_deg,beta_deg,k_db\n";
    for (std::size_t ia = 0; ia < sweep.alphas.size(); ++ia)
        for (std::size_t ib = 0; ib < sweep.betas.size(); ++ib)
            os << format_double(sweep.alphas[ia]) << ',' << format_double(sweep.betas[ib]) << ','
               << format_double(sweep.k_db[sweep.index(ia, ib)]) << '\n';
}

void write_curves_csv(std::ostream &os, const Curves &curves)
{
    os << "x,y_straight,y_optimal\n";
    for (std::size_t i = 0; i < curves.x.size(); ++i)
        os << format_double(curves.x[i]) << ',' << format_double(curves.straight[i]) << ','
           << format_double(curves.optimal[i]) << '\n';
}

ExperimentResult run_experiment(const ExperimentConfig &cfg, const std::filesystem::path &output_dir, std::ostream *log)
{
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    std::filesystem::create_directories(output_dir);

    ExperimentResult res;
    Writer out(output_dir, res.files);
    const AntennaSetup antennas = cfg.antennas();

    for (Condition c : cfg.conditions)
    {
        const LinkScenario sc = cfg.scenario(c);
        const TapProfile profile = cfg.profile(c);
        log_line(log, "sweep " + std::string(to_string(c)) + " at " + format_double(sc.distance_m) + " m");
        const PathEnsemble ens = generate_ensemble(profile, sc, cfg.monte_carlo);
        SweepResult sweep = beam_sweep(ens, antennas, cfg.grid);

        ConditionSummary s;
        s.condition = c;
        s.optimum = sweep.optimum;
        s.k_a_straight_db = linear_to_db(sweep.k_a_straight());
        s.k_a_optimal_db = linear_to_db(sweep.k_a_optimal());
        s.k_e_db = linear_to_db(environment_factor(sc, cfg.ke_mode).k_e);
        res.conditions.push_back(s);

        const std::string tag(to_string(c));
        if (cfg.write_csv)
            out.write("k_grid_" + tag + ".csv", [&](std::ostream &os) { write_k_grid_csv(os, sweep); });
        if (cfg.write_svg)
            out.write("k_grid_" + tag + ".svg", [&](std::ostream &os) {
                os << emit_heatmap_svg(sweep, "K(alpha, beta), " + std::string(c == Condition::los ? "LOS" : "NLOS") +
                                                  ", D = " + format_double(sc.distance_m) + " m");
            });
        if (cfg.dump_paths)
            out.write("paths_" + tag + ".csv", [&](std::ostream &os) { write_paths_csv(os, ens); });
        res.sweeps.emplace(c, std::move(sweep));
    }

    // Curves use the NLOS link when it is configured.
    const Condition curve_cond =
        std::count(cfg.conditions.begin(), cfg.conditions.end(), Condition::nlos) ? Condition::nlos : cfg.conditions.front();
    const std::string curve_name = curve_cond == Condition::los ? "LOS" : "NLOS";

    res.se_vs_snr = efficiency_curves(res.sweeps.at(curve_cond), cfg.grid.snr_values_db(), cfg.ke_mode);

    log_line(log, "distance sweep " + std::string(to_string(curve_cond)));
    {
        const TapProfile profile = cfg.profile(curve_cond);
        DistanceComparison &dc = res.se_vs_distance;
        dc.snr_db = cfg.distance_snr_db;
        for (double d : cfg.grid.distances_m)
        {
            const SweepResult *sweep = nullptr;
            SweepResult fresh;
            if (d == cfg.distance_m)
                sweep = &res.sweeps.at(curve_cond);
            else
            {
                log_line(log, "  D = " + format_double(d) + " m");
                fresh = beam_sweep(cfg.scenario(curve_cond, d), profile, cfg.monte_carlo, cfg.grid, antennas);
                sweep = &fresh;
            }
            const Curves c = efficiency_curves(*sweep, {cfg.distance_snr_db}, cfg.ke_mode);
            dc.curves.x.push_back(d);
            dc.curves.straight.push_back(c.straight.front());
            dc.curves.optimal.push_back(c.optimal.front());
            dc.sweeps.push_back(*sweep);
        }
    }

    if (cfg.write_csv)
    {
        out.write("se_vs_snr.csv", [&](std::ostream &os) { write_curves_csv(os, res.se_vs_snr); });
        out.write("se_vs_distance.csv", [&](std::ostream &os) { write_curves_csv(os, res.se_vs_distance.curves); });

        std::vector<double> az;
        for (int i = -720; i <= 720; ++i)
            az.push_back(0.25 * i);
        const std::vector<double> el0{0.0};
        for (double phi0 : {0.0, 15.0, 30.0})
        {
            const auto pattern = RadiationPattern::array(antennas.gnb_geometry, antennas.gnb_element, {phi0, 0.0},
                                                         antennas.carrier_hz);
            out.write("pattern_gnb_steer_" + format_double(phi0) + ".csv",
                      [&](std::ostream &os) { write_pattern_csv(os, pattern, az, el0); });
        }
        out.write("pattern_ue.csv", [&](std::ostream &os) {
            write_pattern_csv(os, RadiationPattern::element(antennas.ue_element), az, el0);
        });
    }
    if (cfg.write_svg)
    {
        out.write("se_vs_snr.svg", [&](std::ostream &os) {
            os << emit_curves_svg(res.se_vs_snr, "Spectral efficiency vs SNR, " + curve_name, "SNR (dB)",
                                  "C0 (bit/s/Hz)");
        });
        out.write("se_vs_distance.svg", [&](std::ostream &os) {
            os << emit_curves_svg(res.se_vs_distance.curves,
                                  "Spectral efficiency vs distance, " + curve_name + ", SNR = " +
                                      format_double(cfg.distance_snr_db) + " dB",
                                  "D (m)", "C0 (bit/s/Hz)");
        });
    }

    out.write("summary.csv", [&](std::ostream &os) {
        os << "condition,alpha_opt_deg,beta_opt_deg,k_opt_db,k_a_straight_db,k_a_optimal_db,k_e_db\n";
        for (const auto &s : res.conditions)
            os << to_string(s.condition) << ',' << format_double(s.optimum.alpha_deg) << ','
               << format_double(s.optimum.beta_deg) << ',' << format_double(s.optimum.k_db) << ','
               << format_double(s.k_a_straight_db) << ',' << format_double(s.k_a_optimal_db) << ','
               << format_double(s.k_e_db) << '\n';
    });

    res.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    // The manifest is itself a valid config: metadata lives in comments.
    out.write("manifest.txt", [&](std::ostream &os) {
        os << "# mmlink experiment manifest\n"
           << "# library_version = " << library_version() << '\n'
           << "# seed = " << cfg.monte_carlo.seed << '\n'
           << "# wall_time_s = " << format_double(res.wall_time_s) << '\n'
           << "# outputs =";
        for (const auto &f : res.files)
            os << ' ' << f.filename().string();
        os << "\n# re-run with: mmlink run manifest.txt\n\n";
        serialize_config(os, cfg);
    });
    return res;
}

} // namespace mmlink
