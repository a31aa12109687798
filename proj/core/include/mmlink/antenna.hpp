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

#include "mmlink/angles.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace mmlink {

// Parametric element pattern in the 3GPP form: quadratic attenuation per
// plane, vertical side-lobe floor, and a front-to-back clamp on the sum.
struct ElementParams
{
    double hpbw_azimuth_deg = 65.0;
    double hpbw_elevation_deg = 65.0;
    double front_back_ratio_db = 30.0; // A_m
    double sidelobe_floor_db = 30.0;   // SLA_v
    double peak_gain_dbi = 8.0;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;

    // 90 deg single-element UE antenna. The floors are set so the pattern's
    // directivity is 3.75 dBi, matching its peak gain.
    static ElementParams ue_default();

    // Element of the 12x8 gNodeB panel. 5.86 dBi + 10 log10(96) = 25.68 dBi
    // composite peak. The vertical beamwidth makes the panel's directivity
    // equal that peak at 0.5 wavelength spacing; the horizontal one keeps
    // steered peaks within 0.5 deg of the steering angle out to 30 deg.
    static ElementParams gnb_default();
};

struct ArrayGeometry
{
    int n_rows = 1;              // vertical
    int n_cols = 1;              // horizontal
    double row_spacing = 0.5;    // wavelengths
    double col_spacing = 0.5;    // wavelengths

    void validate() const;
    int size() const { return n_rows * n_cols; }

    static ArrayGeometry gnb_default() { return {12, 8, 0.5, 0.5}; }
};

// Gain of a single element (dBi) for a direction given relative to its
// boresight. Total function of the angle.
double element_gain(const BeamOrientation &relative, const ElementParams &params);

// Gain-vs-angle function of an antenna in its own frame: azimuth 0 and
// elevation 0 is the mechanical boresight. Immutable once built.
class RadiationPattern
{
  public:
    using GainFunction = std::function<double(double azimuth_deg, double elevation_deg)>;

    static RadiationPattern isotropic();
    static RadiationPattern element(const ElementParams &params);
    static RadiationPattern array(const ArrayGeometry &geometry, const ElementParams &element,
                                  const BeamOrientation &steering, double carrier_hz);
    static RadiationPattern custom(GainFunction gain, const BeamOrientation &steering = {});

    double gain_dbi(double azimuth_deg, double elevation_deg) const;
    double gain_dbi(const BeamOrientation &dir) const { return gain_dbi(dir.azimuth_deg, dir.elevation_deg); }

    const BeamOrientation &steering() const { return steering_; }
    // Maximum gain, located by a refined search around the steering direction.
    double peak_gain_dbi() const { return peak_gain_dbi_; }
    double peak_azimuth_deg() const { return peak_azimuth_deg_; }
    // Azimuth-cut 3 dB beamwidth; empty for patterns that never drop 3 dB.
    std::optional<double> hpbw_deg() const { return hpbw_deg_; }

    bool is_isotropic() const { return std::holds_alternative<Isotropic>(model_); }

  private:
    struct Isotropic
    {
    };
    struct Element
    {
        ElementParams params;
    };
    struct Array
    {
        ArrayGeometry geometry;
        ElementParams element;
        double carrier_hz;
        double steer_sin; // sin of the azimuth steering angle
        double excess_db; // see array_power_excess_db
    };
    struct Custom
    {
        GainFunction fn;
    };
    using Model = std::variant<Isotropic, Element, Array, Custom>;

    RadiationPattern(Model model, BeamOrientation steering);
    void locate_peak();

    Model model_;
    BeamOrientation steering_{};
    double peak_gain_dbi_ = 0.0;
    double peak_azimuth_deg_ = 0.0;
    std::optional<double> hpbw_deg_;
};

// Quadrature step for the radiated-power check in array_power_excess_db.
inline constexpr double kNormalizationResolutionDeg = 1.0;

// 10 log10 of the composite pattern's sphere integral over 4 pi, floored at 0.
// The separable element x array-factor product radiates more than its input
// power near endfire (about 2.6 dB for the default panel at 90 deg); array
// patterns subtract this so a passive panel never gains power by steering.
// Results are memoized per geometry, element and steering angle.
double array_power_excess_db(const ArrayGeometry &geometry, const ElementParams &element,
                             double steering_azimuth_deg);

// Composite pattern of a uniformly weighted, phase-steered rectangular array:
// element gain + 10 log10(|AF|^2 / N) - array_power_excess_db. Elevation
// steering is fixed at 0 deg.
// Throws std::invalid_argument for |steering azimuth| > 90 deg.
RadiationPattern array_pattern(const ArrayGeometry &geometry, const ElementParams &element,
                               const BeamOrientation &steering, double carrier_hz);

// Linear gains of one array for a fixed set of directions (in the array's
// own frame) under varying azimuth steering. The element pattern and the
// vertical array factor do not depend on the steering and are computed once.
// Agrees with RadiationPattern::array(...).gain_dbi to rounding.
class SteeringEvaluator
{
  public:
    SteeringEvaluator(const ArrayGeometry &geometry, const ElementParams &element,
                      std::span<const BeamOrientation> directions);

    std::size_t size() const { return element_.size(); }
    // out[k] = linear gain towards directions[k] with the beam steered to `steering_azimuth_deg`.
    void linear_gains(double steering_azimuth_deg, std::span<double> out) const;

  private:
    ArrayGeometry geometry_;
    ElementParams element_params_;
    std::vector<double> element_;  // linear element gain
    std::vector<double> vertical_; // vertical |AF|^2 / N
    std::vector<double> horiz_;    // cos(el) sin(az)
};

// Width of the main lobe at peak - 3 dB in the azimuth cut through the peak.
// Throws std::domain_error if the pattern never drops 3 dB below its peak.
double measure_hpbw(const RadiationPattern &pattern);

// Quadrature step used by measure_peak_gain (midpoint rule on an az/el grid).
inline constexpr double kDirectivityResolutionDeg = 0.25;

// Directivity 4 pi U_max / integral(U dOmega), in dBi.
double measure_peak_gain(const RadiationPattern &pattern,
                         double resolution_deg = kDirectivityResolutionDeg);

// Pattern cut export: columns azimuth_deg, elevation_deg, gain_dbi.
void write_pattern_csv(std::ostream &os, const RadiationPattern &pattern,
                       std::span<const double> azimuths_deg, std::span<const double> elevations_deg);

} // namespace mmlink
