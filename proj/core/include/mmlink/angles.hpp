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

#include <cmath>
#include <numbers>

namespace mmlink {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0; // m/s

constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Azimuths are kept in (-180, 180] everywhere in the library.
double wrap_azimuth_deg(double deg);

// Pointing direction. Azimuth is measured counter-clockwise from the +x (OX)
// axis, elevation from the horizontal plane (positive upwards).
struct BeamOrientation
{
    double azimuth_deg = 0.0;
    double elevation_deg = 0.0;
};

struct Vec3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(const Vec3 &a, const Vec3 &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3 &a, const Vec3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, const Vec3 &a) { return {s * a.x, s * a.y, s * a.z}; }
    friend bool operator==(const Vec3 &, const Vec3 &) = default;

    double dot(const Vec3 &o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
};

// Unit vector for an orientation.
Vec3 unit_vector(const BeamOrientation &dir);

// Orientation of the ray from `from` towards `to`.
BeamOrientation direction_of(const Vec3 &from, const Vec3 &to);

} // namespace mmlink
