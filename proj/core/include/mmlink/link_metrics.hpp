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

#include "mmlink/antenna.hpp"
#include "mmlink/mpm.hpp"
#include "mmlink/path_loss.hpp"

#include <span>
#include <string>

namespace mmlink {

// A pattern mounted with its mechanical boresight at a global azimuth.
class MountedAntenna
{
  public:
    MountedAntenna(RadiationPattern pattern, double boresight_azimuth_deg)
        : pattern_(std::move(pattern)), boresight_azimuth_deg_(boresight_azimuth_deg)
    {
    }

    const RadiationPattern &pattern() const { return pattern_; }
    double boresight_azimuth_deg() const { return boresight_azimuth_deg_; }

    // Gain towards a direction given in the global frame.
    double gain_dbi(const BeamOrientation &global) const
    {
        return pattern_.gain_dbi(wrap_azimuth_deg(global.azimuth_deg - boresight_azimuth_deg_), global.elevation_deg);
    }

  private:
    RadiationPattern pattern_;
    double boresight_azimuth_deg_;
};

// The gNodeB panel faces the RX (boresight 180 deg) and is electronically
// steered to alpha; the single-element UE is rotated to beta.
struct AntennaSetup
{
    ArrayGeometry gnb_geometry = ArrayGeometry::gnb_default();
    ElementParams gnb_element = ElementParams::gnb_default();
    ElementParams ue_element = ElementParams::ue_default();
    double carrier_hz = 28e9;

    static constexpr double kTxBoresightDeg = 180.0;

    void validate() const;
    // Throws std::invalid_argument if alpha needs more than 90 deg of steering.
    MountedAntenna tx_for_alpha(double alpha_deg) const;
    MountedAntenna rx_for_beta(double beta_deg) const;
};

// Sum over paths of weight * g_tx(aod) * g_rx(aoa), linear.
// Throws std::invalid_argument for an empty path list.
double received_power(std::span<const PathRealization> paths, const MountedAntenna &tx, const MountedAntenna &rx);

// Mean received power per trial over the ensemble.
double ensemble_mean_power(const PathEnsemble &ensemble, const MountedAntenna &tx, const MountedAntenna &rx);

// Mean omnidirectional power P_m over the ensemble (1 for normalized trials).
double ensemble_omni_power(const PathEnsemble &ensemble);

// K(alpha, beta) in dB relative to the aligned orientation (180, 0) on the
// same ensemble. Throws std::domain_error if the reference power is zero.
double relative_power_factor(double alpha_deg, double beta_deg, const PathEnsemble &ensemble,
                             const AntennaSetup &antennas);

// How K_e is formed from the two path losses. `ratio` uses PL_f / PL_m once;
// `product` multiplies P_m / P_f by PL_f / PL_m, which squares it.
enum class KeMode
{
    ratio,
    product,
};

KeMode parse_ke_mode(std::string_view text);
std::string_view to_string(KeMode mode);

struct EnvironmentFactor
{
    double k_e = 1.0; // linear
    double pl_free_space_db = 0.0;
    double pl_multipath_db = 0.0;
    bool outside_validity = false;
    std::string note;
};

// Multipath loss defaults to UMa LOS/NLOS according to the scenario condition.
EnvironmentFactor environment_factor(const LinkScenario &scenario, KeMode mode = KeMode::ratio);
EnvironmentFactor environment_factor(const LinkScenario &scenario, KeMode mode, PathLossKind multipath_model);

// SNR_0 = P_s / P_n = K_a K_e SNR with K_a = P_s / P_m and SNR = P_f / P_n.
struct LinkBudget
{
    double p_s = 0.0;
    double p_m = 0.0;
    double p_f = 0.0;
    double p_n = 1.0;
    double k_a = 0.0;
    double k_e = 0.0;
    double snr = 0.0;
    double snr_0 = 0.0;

    // Noise is normalized to 1; P_f follows from the SNR and P_s from the chain.
    static LinkBudget from(double p_directional, double p_omni, double k_e, double snr);

    // Throws std::logic_error if the chain does not hold to 1e-12.
    void validate() const;
};

// log2(1 + k_a k_e snr). Throws std::invalid_argument for negative inputs.
double spectral_efficiency(double k_a, double k_e, double snr);

struct SpectralEfficiencyResult
{
    double c_f = 0.0; // omni free-space baseline
    double c_0 = 0.0;
    double snr_db = 0.0;
    double alpha_deg = 180.0;
    double beta_deg = 0.0;
    double distance_m = 0.0;
};

SpectralEfficiencyResult evaluate_link(const LinkBudget &budget, double snr_db, double alpha_deg, double beta_deg,
                                       double distance_m);

} // namespace mmlink
