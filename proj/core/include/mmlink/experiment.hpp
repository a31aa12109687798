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

#include "mmlink/config.hpp"
#include "mmlink/sweep.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mmlink {

std::string_view library_version();

struct ConditionSummary
{
    Condition condition = Condition::nlos;
    Optimum optimum;
    double k_a_straight_db = 0.0;
    double k_a_optimal_db = 0.0;
    double k_e_db = 0.0;
};

struct ExperimentResult
{
    std::vector<ConditionSummary> conditions;
    std::map<Condition, SweepResult> sweeps; // at the scenario distance
    Curves se_vs_snr;
    DistanceComparison se_vs_distance;
    std::vector<std::filesystem::path> files;
    double wall_time_s = 0.0;
};

// Heatmap CSV: alpha_deg,beta_deg,k_db (alpha-major).
void write_k_grid_csv(std::ostream &os, const SweepResult &sweep);
// Curve CSV: x,y_straight,y_optimal.
void write_curves_csv(std::ostream &os, const Curves &curves);

// Runs every sweep the config asks for and writes the artifacts into
// `output_dir` (created if missing). Progress lines go to `log` if given.
ExperimentResult run_experiment(const ExperimentConfig &cfg, const std::filesystem::path &output_dir,
                                std::ostream *log = nullptr);

} // namespace mmlink
