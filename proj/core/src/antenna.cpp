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

#include "mmlink/antenna.hpp"

#include "mmlink/csv.hpp"
#include "mmlink/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <ostream>
#include <string>
#include <tuple>

namespace mmlink {

namespace {

// |AF|^2 power floor relative to N; keeps the pattern finite in array nulls.
constexpr double kArrayFactorFloor = 1e-12;

void require(bool ok, const char *field, const std::string &what)
{
    if (!ok)
        throw std::invalid_argument(std::string(field) + ": " + what);
}

// |sum_{k<n} exp(j k psi)|^2
double dirichlet_power(double psi, int n)
{
    if (n == 1)
        return 1.0;
    const double den = std::sin(0.5 * psi);
    if (std::abs(den) < 1e-12)
        return static_cast<double>(n) * n;
    const double r = std::sin(0.5 * n * psi) / den;
    return r * r;
}

// Linear composite gain before any power normalization.
double raw_array_gain(const ArrayGeometry &g, const ElementParams &e, double steer_sin, double az, double el)
{
    const double phi = deg2rad(az);
    const double theta = deg2rad(el);
    const double psi_h = 2.0 * kPi * g.col_spacing * (std::cos(theta) * std::sin(phi) - steer_sin);
    const double psi_v = 2.0 * kPi * g.row_spacing * std::sin(theta);
    const double af = dirichlet_power(psi_h, g.n_cols) * dirichlet_power(psi_v, g.n_rows) / static_cast<double>(g.size());
    return db_to_linear(element_gain({az, el}, e)) * std::max(af, kArrayFactorFloor);
}

double compute_power_excess_db(const ArrayGeometry &g, const ElementParams &e, double steering_azimuth_deg)
{
    const double s = std::sin(deg2rad(steering_azimuth_deg));
    const double res = kNormalizationResolutionDeg;
    const int n_az = static_cast<int>(std::lround(360.0 / res));
    const int n_el = static_cast<int>(std::lround(180.0 / res));
    const double cell = deg2rad(res) * deg2rad(res);
    CompensatedSum integral;
    for (int j = 0; j < n_el; ++j)
    {
        const double el = -90.0 + (j + 0.5) * res;
        CompensatedSum row;
        for (int i = 0; i < n_az; ++i)
            row.add(raw_array_gain(g, e, s, -180.0 + (i + 0.5) * res, el));
        integral.add(std::cos(deg2rad(el)) * cell * row.value());
    }
    return std::max(0.0, linear_to_db(integral.value() / (4.0 * kPi)));
}

} // namespace

double array_power_excess_db(const ArrayGeometry &geometry, const ElementParams &element,
                             double steering_azimuth_deg)
{
    using Key = std::tuple<int, int, double, double, double, double, double, double, double, double>;
    static std::mutex mutex;
    static std::map<Key, double> cache;
    const Key key{geometry.n_rows,           geometry.n_cols,           geometry.row_spacing,
                  geometry.col_spacing,      element.hpbw_azimuth_deg,  element.hpbw_elevation_deg,
                  element.front_back_ratio_db, element.sidelobe_floor_db, element.peak_gain_dbi,
                  steering_azimuth_deg};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    const double v = compute_power_excess_db(geometry, element, steering_azimuth_deg);
    std::lock_guard lock(mutex);
    cache.emplace(key, v);
    return v;
}

void ElementParams::validate() const
{
    require(hpbw_azimuth_deg > 0.0 && hpbw_azimuth_deg < 180.0, "hpbw_azimuth_deg", "must lie in (0, 180)");
    require(hpbw_elevation_deg > 0.0 && hpbw_elevation_deg < 180.0, "hpbw_elevation_deg", "must lie in (0, 180)");
    require(front_back_ratio_db > 0.0, "front_back_ratio_db", "must be positive");
    require(sidelobe_floor_db > 0.0, "sidelobe_floor_db", "must be positive");
    require(std::isfinite(peak_gain_dbi), "peak_gain_dbi", "must be finite");
}

ElementParams ElementParams::ue_default()
{
    return {90.0, 90.0, 4.36, 4.36, 3.75};
}

ElementParams ElementParams::gnb_default()
{
    return {120.0, 15.0, 30.0, 30.0, 5.86};
}

void ArrayGeometry::validate() const
{
    require(n_rows >= 1, "n_rows", "must be at least 1");
    require(n_cols >= 1, "n_cols", "must be at least 1");
    require(row_spacing > 0.0, "row_spacing", "must be positive");
    require(col_spacing > 0.0, "col_spacing", "must be positive");
}

double element_gain(const BeamOrientation &relative, const ElementParams &p)
{
    const double phi = wrap_azimuth_deg(relative.azimuth_deg);
    const double theta = relative.elevation_deg;
    const double a_h = std::min(12.0 * (phi / p.hpbw_azimuth_deg) * (phi / p.hpbw_azimuth_deg), p.front_back_ratio_db);
    const double a_v = std::min(12.0 * (theta / p.hpbw_elevation_deg) * (theta / p.hpbw_elevation_deg), p.sidelobe_floor_db);
    return p.peak_gain_dbi - std::min(a_h + a_v, p.front_back_ratio_db);
}

RadiationPattern::RadiationPattern(Model model, BeamOrientation steering)
    : model_(std::move(model)), steering_(steering)
{
    locate_peak();
}

RadiationPattern RadiationPattern::isotropic()
{
    return RadiationPattern(Isotropic{}, {});
}

RadiationPattern RadiationPattern::element(const ElementParams &params)
{
    params.validate();
    return RadiationPattern(Element{params}, {});
}

RadiationPattern RadiationPattern::array(const ArrayGeometry &geometry, const ElementParams &element,
                                         const BeamOrientation &steering, double carrier_hz)
{
    geometry.validate();
    element.validate();
    if (!(carrier_hz > 0.0))
        throw std::invalid_argument("carrier_hz: must be positive");
    if (!(std::abs(steering.azimuth_deg) <= 90.0))
        throw std::invalid_argument("steering azimuth " + std::to_string(steering.azimuth_deg) +
                                    " deg is outside [-90, 90] deg");
    if (steering.elevation_deg != 0.0)
        throw std::invalid_argument("elevation steering is fixed at 0 deg");
    const double s = std::sin(deg2rad(steering.azimuth_deg));
    const double excess = array_power_excess_db(geometry, element, steering.azimuth_deg);
    return RadiationPattern(Array{geometry, element, carrier_hz, s, excess}, steering);
}

RadiationPattern RadiationPattern::custom(GainFunction gain, const BeamOrientation &steering)
{
    if (!gain)
        throw std::invalid_argument("custom pattern needs a gain function");
    return RadiationPattern(Custom{std::move(gain)}, steering);
}

double RadiationPattern::gain_dbi(double azimuth_deg, double elevation_deg) const
{
    struct Visitor
    {
        double az, el;
        double operator()(const Isotropic &) const { return 0.0; }
        double operator()(const Element &e) const { return element_gain({az, el}, e.params); }
        double operator()(const Custom &c) const { return c.fn(wrap_azimuth_deg(az), el); }
        double operator()(const Array &a) const
        {
            return linear_to_db(raw_array_gain(a.geometry, a.element, a.steer_sin, az, el)) - a.excess_db;
        }
    };
    return std::visit(Visitor{azimuth_deg, elevation_deg}, model_);
}

void RadiationPattern::locate_peak()
{
    if (is_isotropic())
    {
        peak_gain_dbi_ = 0.0;
        peak_azimuth_deg_ = 0.0;
        hpbw_deg_.reset();
        return;
    }

    const double el = steering_.elevation_deg;
    double best_az = 0.0;
    double best = gain_dbi(0.0, el);
    for (int i = -1800; i < 1800; ++i)
    {
        const double az = 0.1 * i;
        const double g = gain_dbi(az, el);
        if (g > best)
        {
            best = g;
            best_az = az;
        }
    }

    // Golden-section refinement inside the winning grid cell.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = best_az - 0.1, hi = best_az + 0.1;
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double g1 = gain_dbi(x1, el), g2 = gain_dbi(x2, el);
    for (int it = 0; it < 60; ++it)
    {
        if (g1 < g2)
        {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + inv_phi * (hi - lo);
            g2 = gain_dbi(x2, el);
        }
        else
        {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - inv_phi * (hi - lo);
            g1 = gain_dbi(x1, el);
        }
    }
    const double refined_az = 0.5 * (lo + hi);
    const double refined = gain_dbi(refined_az, el);
    if (refined >= best)
    {
        best = refined;
        best_az = refined_az;
    }
    peak_gain_dbi_ = best;
    peak_azimuth_deg_ = wrap_azimuth_deg(best_az);

    try
    {
        hpbw_deg_ = measure_hpbw(*this);
    }
    catch (const std::domain_error &)
    {
        hpbw_deg_.reset();
    }
}

RadiationPattern array_pattern(const ArrayGeometry &geometry, const ElementParams &element,
                               const BeamOrientation &steering, double carrier_hz)
{
    return RadiationPattern::array(geometry, element, steering, carrier_hz);
}

SteeringEvaluator::SteeringEvaluator(const ArrayGeometry &geometry, const ElementParams &element,
                                     std::span<const BeamOrientation> directions)
    : geometry_(geometry), element_params_(element)
{
    geometry.validate();
    element.validate();
    vertical_.reserve(directions.size());
    horiz_.reserve(directions.size());
    for (const auto &d : directions)
    {
        const double phi = deg2rad(d.azimuth_deg);
        const double theta = deg2rad(d.elevation_deg);
        const double psi_v = 2.0 * kPi * geometry.row_spacing * std::sin(theta);
        vertical_.push_back(dirichlet_power(psi_v, geometry.n_rows) / static_cast<double>(geometry.size()));
        horiz_.push_back(std::cos(theta) * std::sin(phi));
        element_.push_back(db_to_linear(element_gain(d, element)));
    }
}

void SteeringEvaluator::linear_gains(double steering_azimuth_deg, std::span<double> out) const
{
    if (out.size() != vertical_.size())
        throw std::invalid_argument("linear_gains: output size mismatch");
    if (!(std::abs(steering_azimuth_deg) <= 90.0))
        throw std::invalid_argument("steering azimuth " + std::to_string(steering_azimuth_deg) +
                                    " deg is outside [-90, 90] deg");
    const double s = std::sin(deg2rad(steering_azimuth_deg));
    const double scale = db_to_linear(-array_power_excess_db(geometry_, element_params_, steering_azimuth_deg));
    for (std::size_t k = 0; k < vertical_.size(); ++k)
    {
        const double psi_h = 2.0 * kPi * geometry_.col_spacing * (horiz_[k] - s);
        out[k] = scale * element_[k] *
                 std::max(dirichlet_power(psi_h, geometry_.n_cols) * vertical_[k], kArrayFactorFloor);
    }
}

double measure_hpbw(const RadiationPattern &pattern)
{
    const double el = pattern.steering().elevation_deg;
    const double peak_az = pattern.peak_azimuth_deg();
    const double level = pattern.peak_gain_dbi() - 3.0;

    auto half_width = [&](double sign) {
        constexpr double step = 0.05;
        double inside = 0.0;
        for (double off = step; off <= 180.0 + 1e-9; off += step)
        {
            if (pattern.gain_dbi(peak_az + sign * off, el) < level)
            {
                double lo = inside, hi = off;
                for (int it = 0; it < 60; ++it)
                {
                    const double mid = 0.5 * (lo + hi);
                    if (pattern.gain_dbi(peak_az + sign * mid, el) < level)
                        hi = mid;
                    else
                        lo = mid;
                }
                return 0.5 * (lo + hi);
            }
            inside = off;
        }
        throw std::domain_error("pattern never drops 3 dB below its peak");
    };

    return half_width(-1.0) + half_width(+1.0);
}

double measure_peak_gain(const RadiationPattern &pattern, double resolution_deg)
{
    if (!(resolution_deg > 0.0))
        throw std::invalid_argument("resolution_deg: must be positive");
    const int n_az = static_cast<int>(std::lround(360.0 / resolution_deg));
    const int n_el = static_cast<int>(std::lround(180.0 / resolution_deg));
    const double cell = deg2rad(resolution_deg) * deg2rad(resolution_deg);

    double g_max = db_to_linear(pattern.peak_gain_dbi());
    CompensatedSum integral;
    for (int j = 0; j < n_el; ++j)
    {
        const double el = -90.0 + (j + 0.5) * resolution_deg;
        const double w = std::cos(deg2rad(el)) * cell;
        CompensatedSum row;
        for (int i = 0; i < n_az; ++i)
        {
            const double az = -180.0 + (i + 0.5) * resolution_deg;
            const double g = db_to_linear(pattern.gain_dbi(az, el));
            g_max = std::max(g_max, g);
            row.add(g);
        }
        integral.add(w * row.value());
    }
    return linear_to_db(4.0 * kPi * g_max / integral.value());
}

void write_pattern_csv(std::ostream &os, const RadiationPattern &pattern, std::span<const double> azimuths_deg,
                       std::span<const double> elevations_deg)
{
    os << "azimuth_deg,elevation_deg,gain_dbi\n";
    for (double el : elevations_deg)
        for (double az : azimuths_deg)
            os << format_double(az) << ',' << format_double(el) << ',' << format_double(pattern.gain_dbi(az, el))
               << '\n';
}

} // namespace mmlink
