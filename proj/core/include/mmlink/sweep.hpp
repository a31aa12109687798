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

#include "mmlink/link_metrics.hpp"
#include "mmlink/mpm.hpp"

#include <vector>

namespace mmlink {

// Inclusive range min:step:max. The step must divide the range exactly.
struct AngleRange
{
    double min_deg = 0.0;
    double max_deg = 0.0;
    double step_deg = 1.0;

    std::vector<double> values() const;
};

struct SweepGrid
{
    AngleRange alpha{90.0, 270.0, 1.0};
    AngleRange beta{-90.0, 90.0, 1.0};
    std::vector<double> distances_m{50.0, 75.0, 100.0, 125.0, 150.0, 175.0, 200.0, 225.0, 250.0};
    std::vector<double> snr_db; // empty means 0:1:30

    // Throws std::invalid_argument naming the offending field
    // (alpha_step_deg, beta_min_deg, distances_m, ...).
    void validate() const;

    std::vector<double> snr_values_db() const;
};

struct Optimum
{
    double alpha_deg = 180.0;
    double beta_deg = 0.0;
    double k_db = 0.0;
};

struct SweepResult
{
    LinkScenario scenario;
    std::vector<double> alphas;
    std::vector<double> betas;
    std::vector<double> power;  // ensemble-mean P_s, row-major [alpha][beta]
    std::vector<double> k_db;   // same layout
    double omni_power = 1.0;    // ensemble-mean P_m
    double reference_power = 0.0;
    Optimum optimum;

    std::size_t index(std::size_t ia, std::size_t ib) const { return ia * betas.size() + ib; }
    double k_at(double alpha_deg, double beta_deg) const;
    double power_at(double alpha_deg, double beta_deg) const;

    double k_a_straight() const { return reference_power / omni_power; }
    double k_a_optimal() const { return power_at(optimum.alpha_deg, optimum.beta_deg) / omni_power; }
};

// K(alpha, beta) over the grid for one shared ensemble. The optimum is the
// grid argmax; ties go to the smallest |beta|, then the smallest |alpha - 180|.
SweepResult beam_sweep(const PathEnsemble &ensemble, const AntennaSetup &antennas, const SweepGrid &grid);

SweepResult beam_sweep(const LinkScenario &scenario, const TapProfile &profile, const MonteCarloConfig &cfg,
                       const SweepGrid &grid, const AntennaSetup &antennas);

// Columns x, y_straight, y_optimal.
struct Curves
{
    std::vector<double> x;
    std::vector<double> straight;
    std::vector<double> optimal;
};

// C_0 against SNR using K_a at (180, 0) and at the sweep optimum.
Curves efficiency_curves(const SweepResult &sweep, const std::vector<double> &snr_db, KeMode mode = KeMode::ratio);

struct DistanceComparison
{
    Curves curves; // x = distance in metres
    std::vector<SweepResult> sweeps;
    double snr_db = 20.0;

    // curve(d1) / curve(d2); both distances must be on the grid.
    double straight_ratio(double d1, double d2) const;
    double optimal_ratio(double d1, double d2) const;
};

// One beam sweep per distance on the grid, each with its own ensemble.
DistanceComparison distance_comparison(const LinkScenario &scenario_template, const TapProfile &profile,
                                       const MonteCarloConfig &cfg, const SweepGrid &grid,
                                       const AntennaSetup &antennas, double snr_db = 20.0,
                                       KeMode mode = KeMode::ratio);

} // namespace mmlink
