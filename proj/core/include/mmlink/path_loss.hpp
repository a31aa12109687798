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

#include <string>

namespace mmlink {

// Friis free-space loss in dB. Throws std::invalid_argument for nonpositive inputs.
double free_space_path_loss(double distance_m, double carrier_hz);

struct PathLossResult
{
    double loss_db = 0.0;
    bool outside_validity = false;
    std::string note; // why the geometry is outside the model's stated range
};

// 3GPP TR 38.901 UMa median path loss (no shadow fading). `d2d_m` is the
// ground distance; the formula uses the 3D distance. Geometries outside the
// model's validity range are still evaluated and flagged.
PathLossResult uma_path_loss(double d2d_m, double carrier_hz, bool los, double h_tx_m, double h_rx_m);

enum class PathLossKind
{
    free_space,
    uma_los,
    uma_nlos,
};

class PathLossModel
{
  public:
    explicit PathLossModel(PathLossKind kind) : kind_(kind) {}

    PathLossKind kind() const { return kind_; }

    // Free space is evaluated at the 3D TX-RX distance, like UMa.
    PathLossResult evaluate(double d2d_m, double carrier_hz, double h_tx_m, double h_rx_m) const;

  private:
    PathLossKind kind_;
};

} // namespace mmlink
