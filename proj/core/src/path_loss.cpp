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

#include "mmlink/path_loss.hpp"

#include "mmlink/angles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mmlink {

double free_space_path_loss(double distance_m, double carrier_hz)
{
    if (!(distance_m > 0.0))
        throw std::invalid_argument("distance_m: must be positive");
    if (!(carrier_hz > 0.0))
        throw std::invalid_argument("carrier_hz: must be positive");
    return 20.0 * std::log10(4.0 * kPi * distance_m * carrier_hz / kSpeedOfLight);
}

PathLossResult uma_path_loss(double d2d_m, double carrier_hz, bool los, double h_tx_m, double h_rx_m)
{
    if (!(d2d_m > 0.0))
        throw std::invalid_argument("d2d_m: must be positive");
    if (!(carrier_hz > 0.0))
        throw std::invalid_argument("carrier_hz: must be positive");
    if (!(h_tx_m > 0.0) || !(h_rx_m > 0.0))
        throw std::invalid_argument("antenna heights must be positive");

    PathLossResult out;
    auto flag = [&out](const std::string &why) {
        out.outside_validity = true;
        if (!out.note.empty())
            out.note += "; ";
        out.note += why;
    };
    if (d2d_m < 10.0 || d2d_m > 5000.0)
        flag("d2D outside [10 m, 5 km]");
    if (h_tx_m != 25.0)
        flag("UMa assumes a 25 m base station height");
    if (h_rx_m < 1.5 || h_rx_m > 22.5)
        flag("UT height outside [1.5 m, 22.5 m]");

    const double fc_ghz = carrier_hz / 1e9;
    const double d3d = std::hypot(d2d_m, h_tx_m - h_rx_m);

    // Effective environment height is 1 m for UT heights below 13 m.
    const double h_e = 1.0;
    const double d_bp = 4.0 * (h_tx_m - h_e) * (h_rx_m - h_e) * carrier_hz / kSpeedOfLight;

    double pl_los = 0.0;
    if (d2d_m <= d_bp || d_bp <= 0.0)
        pl_los = 28.0 + 22.0 * std::log10(d3d) + 20.0 * std::log10(fc_ghz);
    else
        pl_los = 28.0 + 40.0 * std::log10(d3d) + 20.0 * std::log10(fc_ghz) -
                 9.0 * std::log10(d_bp * d_bp + (h_tx_m - h_rx_m) * (h_tx_m - h_rx_m));

    if (los)
    {
        out.loss_db = pl_los;
        return out;
    }
    const double pl_nlos = 13.54 + 39.08 * std::log10(d3d) + 20.0 * std::log10(fc_ghz) - 0.6 * (h_rx_m - 1.5);
    out.loss_db = std::max(pl_los, pl_nlos);
    return out;
}

PathLossResult PathLossModel::evaluate(double d2d_m, double carrier_hz, double h_tx_m, double h_rx_m) const
{
    switch (kind_)
    {
    case PathLossKind::free_space:
        return {free_space_path_loss(std::hypot(d2d_m, h_tx_m - h_rx_m), carrier_hz), false, {}};
    case PathLossKind::uma_los:
        return uma_path_loss(d2d_m, carrier_hz, true, h_tx_m, h_rx_m);
    case PathLossKind::uma_nlos:
        return uma_path_loss(d2d_m, carrier_hz, false, h_tx_m, h_rx_m);
    }
    throw std::logic_error("unreachable path loss kind");
}

} // namespace mmlink
