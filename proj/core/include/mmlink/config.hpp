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
#include "mmlink/sweep.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmlink {

// Raised for unreadable, malformed or out-of-range configuration. `field()`
// is "section.key" (or just the section) of the first offending entry.
class ConfigError : public std::runtime_error
{
  public:
    ConfigError(std::string field, const std::string &message)
        : std::runtime_error(field + ": " + message), field_(std::move(field))
    {
    }
    const std::string &field() const { return field_; }

  private:
    std::string field_;
};

struct ExperimentConfig
{
    // [scenario]
    double distance_m = 100.0;
    double tx_height_m = 7.0;
    double rx_height_m = 1.5;
    double carrier_ghz = 28.0;
    std::vector<Condition> conditions{Condition::los, Condition::nlos};

    // [antenna]
    ArrayGeometry gnb_geometry = ArrayGeometry::gnb_default();
    ElementParams gnb_element = ElementParams::gnb_default();
    ElementParams ue_element = ElementParams::ue_default();

    // [channel]
    TdlModel los_model = TdlModel::D;
    TdlModel nlos_model = TdlModel::B;
    double sigma_tau_ns = 266.0;
    double rician_k_db = 13.3;
    KeMode ke_mode = KeMode::ratio;

    // [monte_carlo]
    MonteCarloConfig monte_carlo;

    // [sweep]
    SweepGrid grid{{90.0, 270.0, 1.0}, {-90.0, 90.0, 1.0}, {50, 75, 100, 125, 150, 175, 200, 225, 250}, {}};
    double distance_snr_db = 20.0;

    // [output]
    std::string output_directory = "mmlink_out";
    bool write_csv = true;
    bool write_svg = true;
    bool dump_paths = false;

    static ExperimentConfig defaults();

    // Checks every field against the preconditions of the modules that will
    // consume it. Throws ConfigError.
    void validate() const;

    LinkScenario scenario(Condition c) const;
    LinkScenario scenario(Condition c, double distance_m) const;
    TapProfile profile(Condition c) const;
    AntennaSetup antennas() const;
};

// Sectioned key = value text; '#' starts a comment. Unknown sections or keys
// are errors. Missing keys keep their defaults. The result is validated.
ExperimentConfig parse_config(std::istream &is);
ExperimentConfig load_config(const std::string &path);

// Writes every field; parse_config(serialize_config(c)) reproduces c.
void serialize_config(std::ostream &os, const ExperimentConfig &cfg);

} // namespace mmlink
