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

#include "mmlink/link_metrics.hpp"

#include "mmlink/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mmlink {

void AntennaSetup::validate() const
{
    gnb_geometry.validate();
    gnb_element.validate();
    ue_element.validate();
    if (!(carrier_hz > 0.0))
        throw std::invalid_argument("carrier_hz: must be positive");
}

MountedAntenna AntennaSetup::tx_for_alpha(double alpha_deg) const
{
    const double phi0 = wrap_azimuth_deg(alpha_deg - kTxBoresightDeg);
    return {RadiationPattern::array(gnb_geometry, gnb_element, {phi0, 0.0}, carrier_hz), kTxBoresightDeg};
}

MountedAntenna AntennaSetup::rx_for_beta(double beta_deg) const
{
    return {RadiationPattern::element(ue_element), beta_deg};
}

double received_power(std::span<const PathRealization> paths, const MountedAntenna &tx, const MountedAntenna &rx)
{
    if (paths.empty())
        throw std::invalid_argument("received_power: empty path list");
    CompensatedSum s;
    for (const auto &p : paths)
        s.add(p.power_weight * db_to_linear(tx.gain_dbi(p.aod)) * db_to_linear(rx.gain_dbi(p.aoa)));
    return s.value();
}

double ensemble_mean_power(const PathEnsemble &ensemble, const MountedAntenna &tx, const MountedAntenna &rx)
{
    return received_power(ensemble.paths, tx, rx) / ensemble.trials;
}

double ensemble_omni_power(const PathEnsemble &ensemble)
{
    CompensatedSum s;
    for (const auto &p : ensemble.paths)
        s.add(p.power_weight);
    return s.value() / ensemble.trials;
}

double relative_power_factor(double alpha_deg, double beta_deg, const PathEnsemble &ensemble,
                             const AntennaSetup &antennas)
{
    const double ref = ensemble_mean_power(ensemble, antennas.tx_for_alpha(180.0), antennas.rx_for_beta(0.0));
    if (!(ref > 0.0))
        throw std::domain_error("reference power at (180, 0) is zero");
    if (alpha_deg == 180.0 && beta_deg == 0.0)
        return 0.0;
    const double p = ensemble_mean_power(ensemble, antennas.tx_for_alpha(alpha_deg), antennas.rx_for_beta(beta_deg));
    return linear_to_db(p / ref);
}

KeMode parse_ke_mode(std::string_view text)
{
    if (text == "ratio")
        return KeMode::ratio;
    if (text == "product")
        return KeMode::product;
    throw std::invalid_argument("unknown K_e mode '" + std::string(text) + "' (expected ratio or product)");
}

std::string_view to_string(KeMode mode)
{
    return mode == KeMode::ratio ? "ratio" : "product";
}

EnvironmentFactor environment_factor(const LinkScenario &scenario, KeMode mode)
{
    return environment_factor(scenario, mode,
                              scenario.condition == Condition::los ? PathLossKind::uma_los : PathLossKind::uma_nlos);
}

EnvironmentFactor environment_factor(const LinkScenario &scenario, KeMode mode, PathLossKind multipath_model)
{
    scenario.validate();
    const PathLossResult fs = PathLossModel(PathLossKind::free_space)
                                  .evaluate(scenario.distance_m, scenario.carrier_hz, scenario.tx_height_m,
                                            scenario.rx_height_m);
    const PathLossResult mp = PathLossModel(multipath_model)
                                  .evaluate(scenario.distance_m, scenario.carrier_hz, scenario.tx_height_m,
                                            scenario.rx_height_m);
    EnvironmentFactor out;
    out.pl_free_space_db = fs.loss_db;
    out.pl_multipath_db = mp.loss_db;
    const double once = db_to_linear(fs.loss_db - mp.loss_db);
    out.k_e = mode == KeMode::ratio ? once : once * once;
    out.outside_validity = mp.outside_validity;
    out.note = mp.note;
    return out;
}

LinkBudget LinkBudget::from(double p_directional, double p_omni, double k_e, double snr)
{
    if (!(p_directional >= 0.0) || !(p_omni > 0.0) || !(k_e >= 0.0) || !(snr >= 0.0))
        throw std::invalid_argument("link budget inputs must be nonnegative (P_m positive)");
    LinkBudget b;
    b.p_s = p_directional;
    b.p_m = p_omni;
    b.p_n = 1.0;
    b.snr = snr;
    b.p_f = snr * b.p_n;
    b.k_a = p_directional / p_omni;
    b.k_e = k_e;
    b.snr_0 = b.k_a * b.k_e * b.snr;
    return b;
}

void LinkBudget::validate() const
{
    auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max({std::abs(a), std::abs(b), 1e-300}); };
    if (p_s < 0.0 || p_m < 0.0 || p_f < 0.0 || p_n < 0.0)
        throw std::logic_error("link budget powers must be nonnegative");
    if (!close(k_a, p_s / p_m))
        throw std::logic_error("k_a != p_s / p_m");
    if (!close(snr, p_f / p_n))
        throw std::logic_error("snr != p_f / p_n");
    if (!close(snr_0, k_a * k_e * snr))
        throw std::logic_error("snr_0 != k_a k_e snr");
}

double spectral_efficiency(double k_a, double k_e, double snr)
{
    if (!(k_a >= 0.0))
        throw std::invalid_argument("k_a: must be nonnegative");
    if (!(k_e >= 0.0))
        throw std::invalid_argument("k_e: must be nonnegative");
    if (!(snr >= 0.0))
        throw std::invalid_argument("snr: must be nonnegative");
    return std::log2(1.0 + k_a * k_e * snr);
}

SpectralEfficiencyResult evaluate_link(const LinkBudget &budget, double snr_db, double alpha_deg, double beta_deg,
                                       double distance_m)
{
    SpectralEfficiencyResult r;
    r.c_f = spectral_efficiency(1.0, 1.0, budget.snr);
    r.c_0 = spectral_efficiency(budget.k_a, budget.k_e, budget.snr);
    r.snr_db = snr_db;
    r.alpha_deg = alpha_deg;
    r.beta_deg = beta_deg;
    r.distance_m = distance_m;
    return r;
}

} // namespace mmlink
