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

#include "mmlink/sweep.hpp"

#include <string>
#include <vector>

namespace mmlink {

// Fixed heatmap geometry, so tests and scripts can map pixels back to cells.
struct HeatmapLayout
{
    double cell_px = 3.0;
    double left_px = 70.0;
    double top_px = 40.0;
};

struct Rgb
{
    unsigned char r = 0, g = 0, b = 0;
    friend bool operator==(const Rgb &, const Rgb &) = default;
};

// Perceptually ordered dark-blue to yellow ramp; t is clamped to [0, 1].
Rgb colormap(double t);
std::string to_hex(const Rgb &c);

// Self-contained SVG: one rect per cell (x = first axis, y = second axis
// increasing upwards), axis labels, a dB colour legend and a marker on the
// maximum cell. `values` is row-major [x][y]. Throws std::invalid_argument
// for an empty or mis-sized grid.
std::string emit_heatmap_svg(const std::vector<double> &xs, const std::vector<double> &ys,
                             const std::vector<double> &values, const std::string &title,
                             const HeatmapLayout &layout = {});

// K(alpha, beta) map of a sweep.
std::string emit_heatmap_svg(const SweepResult &sweep, const std::string &title, const HeatmapLayout &layout = {});

// Straight and optimal curves on shared axes.
std::string emit_curves_svg(const Curves &curves, const std::string &title, const std::string &x_label,
                            const std::string &y_label);

} // namespace mmlink
