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

#include "mmlink/mpm.hpp"

#include "mmlink/csv.hpp"
#include "mmlink/numeric.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mmlink {

namespace {

constexpr int kMaxElevationDraws = 100000;

} // namespace

std::string_view to_string(Condition c)
{
    return c == Condition::los ? "los" : "nlos";
}

void LinkScenario::validate() const
{
    if (!(distance_m > 0.0))
        throw std::invalid_argument("distance_m: must be positive");
    if (!(tx_height_m > 0.0))
        throw std::invalid_argument("tx_height_m: must be positive");
    if (!(rx_height_m > 0.0))
        throw std::invalid_argument("rx_height_m: must be positive");
    if (!(carrier_hz > 0.0))
        throw std::invalid_argument("carrier_hz: must be positive");
}

double LinkScenario::distance_3d_m() const
{
    return (tx_position() - rx_position()).norm();
}

double Ellipsoid::semi_minor_m() const
{
    const double c = 0.5 * focal_separation_m;
    return std::sqrt(std::max(semi_major_m * semi_major_m - c * c, 0.0));
}

void MonteCarloConfig::validate() const
{
    if (paths_per_ellipsoid < 1)
        throw std::invalid_argument("paths_per_ellipsoid: must be at least 1");
    if (trials < 1)
        throw std::invalid_argument("trials: must be at least 1");
}

std::vector<Ellipsoid> build_ellipsoids(const TapProfile &profile, const LinkScenario &scenario)
{
    scenario.validate();
    const double d3 = scenario.distance_3d_m();
    std::vector<Ellipsoid> out;
    for (std::size_t i = 0; i < profile.taps.size(); ++i)
    {
        const Tap &t = profile.taps[i];
        if (t.kind == TapKind::direct)
            continue;
        Ellipsoid e;
        e.tap_index = static_cast<int>(i);
        e.excess_delay_s = t.delay_s;
        e.semi_major_m = 0.5 * (d3 + kSpeedOfLight * t.delay_s);
        e.focal_separation_m = d3;
        e.tap_power = t.power;
        out.push_back(e);
    }
    return out;
}

std::vector<Vec3> draw_scatterers(const Ellipsoid &e, const LinkScenario &scenario, int L, RngStream &rng)
{
    if (e.degenerate())
        throw std::invalid_argument("cannot place scatterers on a degenerate ellipsoid (tap " +
                                    std::to_string(e.tap_index) + ")");
    const Vec3 tx = scenario.tx_position();
    const Vec3 v = tx - scenario.rx_position();
    const double a = e.semi_major_m;
    const double c = 0.5 * e.focal_separation_m;
    const double b2 = a * a - c * c;

    std::vector<Vec3> points;
    points.reserve(static_cast<std::size_t>(L));
    for (int l = 0; l < L; ++l)
    {
        const double az = rng.uniform(-180.0, 180.0);
        int attempts = 0;
        for (;;)
        {
            if (++attempts > kMaxElevationDraws)
                throw std::logic_error("no elevation reaches the upper semi-ellipsoid");
            const double el = rng.uniform(-90.0, 90.0);
            const Vec3 u = unit_vector({az, el});
            // Focal-polar form of the spheroid seen from the TX focus.
            const double r = b2 / (a + 0.5 * u.dot(v));
            const Vec3 p = tx + r * u;
            if (p.z >= 0.0)
            {
                points.push_back(p);
                break;
            }
        }
    }
    return points;
}

std::vector<PathRealization> realize_paths(const TapProfile &profile, const LinkScenario &scenario,
                                           const MonteCarloConfig &cfg, int trial)
{
    cfg.validate();
    if (trial < 0 || trial >= cfg.trials)
        throw std::out_of_range("trial index " + std::to_string(trial) + " outside [0, " +
                                std::to_string(cfg.trials) + ")");

    const auto ellipsoids = build_ellipsoids(profile, scenario);
    const Vec3 tx = scenario.tx_position();
    const Vec3 rx = scenario.rx_position();
    const bool los = scenario.condition == Condition::los;

    CompensatedSum placed;
    if (los)
        placed.add(profile.direct_power());
    for (const auto &e : ellipsoids)
        if (!e.degenerate())
            placed.add(e.tap_power);
    const double norm = placed.value();
    if (!(norm > 0.0))
        throw std::invalid_argument("profile has no power that can be placed for this scenario");

    std::vector<PathRealization> paths;
    const double d3 = scenario.distance_3d_m();

    if (los)
    {
        for (std::size_t i = 0; i < profile.taps.size(); ++i)
        {
            const Tap &t = profile.taps[i];
            if (t.kind != TapKind::direct)
                continue;
            PathRealization p;
            p.scatterer = rx;
            p.aod = direction_of(tx, rx);
            p.aoa = direction_of(rx, tx);
            p.delay_s = d3 / kSpeedOfLight;
            p.power_weight = t.power / norm;
            p.kind = TapKind::direct;
            p.tap_index = static_cast<int>(i);
            paths.push_back(p);
        }
    }

    RngStream rng = RngStream::for_trial(cfg.seed, static_cast<std::uint64_t>(trial));
    const int L = cfg.paths_per_ellipsoid;
    for (const auto &e : ellipsoids)
    {
        if (e.degenerate())
            continue;
        const double w = e.tap_power / norm / L;
        for (const Vec3 &s : draw_scatterers(e, scenario, L, rng))
        {
            PathRealization p;
            p.scatterer = s;
            p.aod = direction_of(tx, s);
            p.aoa = direction_of(rx, s);
            p.delay_s = 2.0 * e.semi_major_m / kSpeedOfLight;
            p.power_weight = w;
            p.kind = TapKind::scattered;
            p.tap_index = e.tap_index;
            paths.push_back(p);
        }
    }
    return paths;
}

PathEnsemble generate_ensemble(const TapProfile &profile, const LinkScenario &scenario, const MonteCarloConfig &cfg)
{
    cfg.validate();
    scenario.validate();
    std::vector<std::vector<PathRealization>> per_trial(static_cast<std::size_t>(cfg.trials));

#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < cfg.trials; ++t)
        per_trial[static_cast<std::size_t>(t)] = realize_paths(profile, scenario, cfg, t);

    PathEnsemble ens;
    ens.scenario = scenario;
    ens.trials = cfg.trials;
    ens.trial_offsets.reserve(per_trial.size() + 1);
    ens.trial_offsets.push_back(0);
    for (auto &trial : per_trial)
    {
        ens.paths.insert(ens.paths.end(), trial.begin(), trial.end());
        ens.trial_offsets.push_back(ens.paths.size());
    }
    return ens;
}

void write_paths_csv(std::ostream &os, const PathEnsemble &ensemble)
{
    os << "trial,tap,x,y,z,aod_az,aoa_az,delay_s,weight\n";
    for (int t = 0; t < ensemble.trials; ++t)
        for (std::size_t i = ensemble.trial_offsets[t]; i < ensemble.trial_offsets[t + 1]; ++i)
        {
            const auto &p = ensemble.paths[i];
            os << t << ',' << p.tap_index << ',' << format_double(p.scatterer.x) << ','
               << format_double(p.scatterer.y) << ',' << format_double(p.scatterer.z) << ','
               << format_double(p.aod.azimuth_deg) << ',' << format_double(p.aoa.azimuth_deg) << ','
               << format_double(p.delay_s) << ',' << format_double(p.power_weight) << '\n';
        }
}

} // namespace mmlink
