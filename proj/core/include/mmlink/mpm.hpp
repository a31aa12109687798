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

#pragma once

#include "mmlink/angles.hpp"
#include "mmlink/channel_profiles.hpp"
#include "mmlink/rng.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace mmlink {

enum class Condition
{
    los,
    nlos,
};

std::string_view to_string(Condition c);

// RX sits at (0, 0, h_rx), TX at (D, 0, h_tx). Beam azimuths are measured
// from +x, so the TX looks at the RX along 180 deg and the RX at the TX along 0.
struct LinkScenario
{
    double distance_m = 100.0; // ground distance
    double tx_height_m = 7.0;
    double rx_height_m = 1.5;
    double carrier_hz = 28e9;
    Condition condition = Condition::nlos;

    void validate() const;

    Vec3 tx_position() const { return {distance_m, 0.0, tx_height_m}; }
    Vec3 rx_position() const { return {0.0, 0.0, rx_height_m}; }
    double distance_3d_m() const;
};

// Prolate spheroid with the TX and RX at its foci holding every scatterer of
// one delay tap.
struct Ellipsoid
{
    int tap_index = 0;
    double semi_major_m = 0.0;
    double focal_separation_m = 0.0;
    double tap_power = 0.0;
    double excess_delay_s = 0.0;

    // A zero-excess-delay tap collapses onto the TX-RX segment.
    bool degenerate() const { return !(2.0 * semi_major_m > focal_separation_m); }
    double semi_minor_m() const;
};

// One ellipsoid per scattered tap, in tap (delay) order. Degenerate ones are
// kept so indices line up with the profile; they receive no scatterers.
std::vector<Ellipsoid> build_ellipsoids(const TapProfile &profile, const LinkScenario &scenario);

// L points on the upper semi-ellipsoid, each where a ray from the TX with a
// uniform azimuth and uniform elevation meets the surface. Elevations that
// would put the point below ground are redrawn.
std::vector<Vec3> draw_scatterers(const Ellipsoid &e, const LinkScenario &scenario, int L, RngStream &rng);

struct PathRealization
{
    Vec3 scatterer; // the RX position for the direct path
    BeamOrientation aod;
    BeamOrientation aoa;
    double delay_s = 0.0; // absolute propagation delay
    double power_weight = 0.0;
    TapKind kind = TapKind::scattered;
    int tap_index = 0;
};

struct MonteCarloConfig
{
    int paths_per_ellipsoid = 10; // L
    int trials = 360;             // M
    std::uint64_t seed = 1;

    void validate() const;
};

// Paths of one trial. Weights sum to one; the power of taps that cannot be
// placed on an ellipsoid is spread over the rest in proportion. Depends only
// on (cfg.seed, trial).
std::vector<PathRealization> realize_paths(const TapProfile &profile, const LinkScenario &scenario,
                                           const MonteCarloConfig &cfg, int trial);

struct PathEnsemble
{
    LinkScenario scenario;
    int trials = 0;
    std::vector<PathRealization> paths; // all trials, in trial order
    std::vector<std::size_t> trial_offsets; // trials + 1 entries

    std::size_t trial_size(int trial) const { return trial_offsets[trial + 1] - trial_offsets[trial]; }
};

// All M trials. Trials may run in parallel; the result is assembled in trial order.
PathEnsemble generate_ensemble(const TapProfile &profile, const LinkScenario &scenario, const MonteCarloConfig &cfg);

// Debug dump: trial,tap,x,y,z,aod_az,aoa_az,delay_s,weight
void write_paths_csv(std::ostream &os, const PathEnsemble &ensemble);

} // namespace mmlink
