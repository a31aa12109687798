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

#include "mmlink/angles.hpp"

namespace mmlink {

double wrap_azimuth_deg(double deg)
{
    double w = std::fmod(deg, 360.0);
    if (w <= -180.0)
        w += 360.0;
    else if (w > 180.0)
        w -= 360.0;
    return w;
}

Vec3 unit_vector(const BeamOrientation &dir)
{
    const double az = deg2rad(dir.azimuth_deg);
    const double el = deg2rad(dir.elevation_deg);
    return {std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)};
}

BeamOrientation direction_of(const Vec3 &from, const Vec3 &to)
{
    const Vec3 d = to - from;
    const double horiz = std::hypot(d.x, d.y);
    return {wrap_azimuth_deg(rad2deg(std::atan2(d.y, d.x))), rad2deg(std::atan2(d.z, horiz))};
}

} // namespace mmlink
