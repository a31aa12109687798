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

#include "mmlink/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mmlink {

namespace {

// Control points sampled from the viridis map.
constexpr std::array<std::array<double, 3>, 9> kRamp = {{
    {68, 1, 84},
    {71, 44, 122},
    {59, 81, 139},
    {44, 113, 142},
    {33, 144, 141},
    {39, 173, 129},
    {92, 200, 99},
    {170, 220, 50},
    {253, 231, 37},
}};

std::string num(double v, int precision = 2)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
    std::string s(buf, res.ptr);
    if (s == "-0.00" || s == "-0.0" || s == "-0")
        s.erase(0, 1);
    return s;
}

std::string escape(const std::string &text)
{
    std::string out;
    for (char c : text)
        switch (c)
        {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    return out;
}

// Round tick step giving roughly `target` intervals over `span`.
double tick_step(double span, int target)
{
    if (!(span > 0.0))
        return 1.0;
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0})
        if (m * mag >= raw)
            return m * mag;
    return 10.0 * mag;
}

std::vector<double> ticks(double lo, double hi, int target)
{
    const double step = tick_step(hi - lo, target);
    std::vector<double> t;
    for (double v = std::ceil(lo / step - 1e-9) * step; v <= hi + 1e-9 * step; v += step)
        t.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
    if (t.empty())
        t.push_back(lo);
    return t;
}

} // namespace

Rgb colormap(double t)
{
    if (!(t > 0.0))
        t = 0.0;
    t = std::min(t, 1.0);
    const double pos = t * (kRamp.size() - 1);
    const auto i = std::min(static_cast<std::size_t>(pos), kRamp.size() - 2);
    const double f = pos - static_cast<double>(i);
    auto mix = [&](int ch) {
        return static_cast<unsigned char>(std::lround(kRamp[i][ch] + f * (kRamp[i + 1][ch] - kRamp[i][ch])));
    };
    return {mix(0), mix(1), mix(2)};
}

std::string to_hex(const Rgb &c)
{
    static const char *digits = "0123456789abcdef";
    std::string s = "#";
    for (unsigned char v : {c.r, c.g, c.b})
    {
        s += digits[v >> 4];
        s += digits[v & 15];
    }
    return s;
}

std::string emit_heatmap_svg(const std::vector<double> &xs, const std::vector<double> &ys,
                             const std::vector<double> &values, const std::string &title, const HeatmapLayout &layout)
{
    if (xs.empty() || ys.empty() || values.empty())
        throw std::invalid_argument("emit_heatmap_svg: empty grid");
    if (values.size() != xs.size() * ys.size())
        throw std::invalid_argument("emit_heatmap_svg: values do not match the axes");

    const auto [mn_it, mx_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *mn_it, hi = *mx_it;
    const bool flat = !(hi > lo);
    const auto norm = [&](double v) { return flat ? 0.5 : (v - lo) / (hi - lo); };

    const double cell = layout.cell_px;
    const double plot_w = cell * xs.size();
    const double plot_h = cell * ys.size();
    const double legend_x = layout.left_px + plot_w + 30.0;
    const double width = legend_x + 90.0;
    const double height = layout.top_px + plot_h + 60.0;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
       << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
       << "<title>" << escape(title) << "</title>\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height) << "\" fill=\"#ffffff\"/>\n"
       << "<text x=\"" << num(layout.left_px + plot_w / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
       << escape(title) << "</text>\n";

    os << "<g class=\"cells\" shape-rendering=\"crispEdges\">\n";
    std::size_t best = 0;
    for (std::size_t ix = 0; ix < xs.size(); ++ix)
        for (std::size_t iy = 0; iy < ys.size(); ++iy)
        {
            const std::size_t k = ix * ys.size() + iy;
            if (values[k] > values[best])
                best = k;
            const double x = layout.left_px + cell * ix;
            const double y = layout.top_px + plot_h - cell * (iy + 1);
            os << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(cell) << "\" height=\""
               << num(cell) << "\" fill=\"" << to_hex(colormap(norm(values[k]))) << "\"/>\n";
        }
    os << "</g>\n";

    const std::size_t bx = best / ys.size(), by = best % ys.size();
    os << "<rect class=\"maximum\" x=\"" << num(layout.left_px + cell * bx) << "\" y=\""
       << num(layout.top_px + plot_h - cell * (by + 1)) << "\" width=\"" << num(cell) << "\" height=\"" << num(cell)
       << "\" fill=\"none\" stroke=\"#ff0000\" stroke-width=\"1\"/>\n";

    // Axes with ticks at cell centres.
    const double x0 = layout.left_px, y0 = layout.top_px + plot_h;
    os << "<rect x=\"" << num(x0) << "\" y=\"" << num(layout.top_px) << "\" width=\"" << num(plot_w) << "\" height=\""
       << num(plot_h) << "\" fill=\"none\" stroke=\"#000000\"/>\n";
    const double dx = xs.size() > 1 ? (xs.back() - xs.front()) / (xs.size() - 1) : 1.0;
    const double dy = ys.size() > 1 ? (ys.back() - ys.front()) / (ys.size() - 1) : 1.0;
    for (double t : ticks(xs.front(), xs.back(), 6))
    {
        const double px = x0 + cell * ((t - xs.front()) / dx + 0.5);
        os << "<line x1=\"" << num(px) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(px) << "\" y2=\""
           << num(y0 + 5) << "\" stroke=\"#000000\"/>\n"
           << "<text x=\"" << num(px) << "\" y=\"" << num(y0 + 18) << "\" text-anchor=\"middle\">" << num(t, 0)
           << "</text>\n";
    }
    for (double t : ticks(ys.front(), ys.back(), 6))
    {
        const double py = y0 - cell * ((t - ys.front()) / dy + 0.5);
        os << "<line x1=\"" << num(x0 - 5) << "\" y1=\"" << num(py) << "\" x2=\"" << num(x0) << "\" y2=\"" << num(py)
           << "\" stroke=\"#000000\"/>\n"
           << "<text x=\"" << num(x0 - 8) << "\" y=\"" << num(py + 4) << "\" text-anchor=\"end\">" << num(t, 0)
           << "</text>\n";
    }
    os << "<text x=\"" << num(x0 + plot_w / 2) << "\" y=\"" << num(y0 + 40)
       << "\" text-anchor=\"middle\">\xCE\xB1 (deg)</text>\n"
       << "<text x=\"20\" y=\"" << num(layout.top_px + plot_h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
       << num(layout.top_px + plot_h / 2) << ")\">\xCE\xB2 (deg)</text>\n";

    // Legend: vertical ramp, max at the top.
    constexpr int kLegendSteps = 64;
    const double lh = plot_h / kLegendSteps;
    os << "<g class=\"legend\">\n";
    for (int i = 0; i < kLegendSteps; ++i)
    {
        const double t = flat ? 0.5 : (i + 0.5) / kLegendSteps;
        os << "<rect x=\"" << num(legend_x) << "\" y=\"" << num(y0 - lh * (i + 1)) << "\" width=\"16\" height=\""
           << num(lh) << "\" fill=\"" << to_hex(colormap(t)) << "\"/>\n";
    }
    os << "<rect x=\"" << num(legend_x) << "\" y=\"" << num(layout.top_px) << "\" width=\"16\" height=\"" << num(plot_h)
       << "\" fill=\"none\" stroke=\"#000000\"/>\n"
       << "<text x=\"" << num(legend_x + 20) << "\" y=\"" << num(layout.top_px + 10) << "\">" << num(hi) << "</text>\n"
       << "<text x=\"" << num(legend_x + 20) << "\" y=\"" << num(y0) << "\">" << num(lo) << "</text>\n"
       << "<text x=\"" << num(legend_x) << "\" y=\"" << num(layout.top_px - 8) << "\">K (dB)</text>\n"
       << "</g>\n</svg>\n";
    return os.str();
}

std::string emit_heatmap_svg(const SweepResult &sweep, const std::string &title, const HeatmapLayout &layout)
{
    return emit_heatmap_svg(sweep.alphas, sweep.betas, sweep.k_db, title, layout);
}

std::string emit_curves_svg(const Curves &curves, const std::string &title, const std::string &x_label,
                            const std::string &y_label)
{
    if (curves.x.empty() || curves.straight.size() != curves.x.size() || curves.optimal.size() != curves.x.size())
        throw std::invalid_argument("emit_curves_svg: empty or mis-sized curves");

    constexpr double left = 60, top = 40, w = 480, h = 300;
    double xlo = *std::min_element(curves.x.begin(), curves.x.end());
    double xhi = *std::max_element(curves.x.begin(), curves.x.end());
    double ylo = 0.0, yhi = 0.0;
    for (const auto *c : {&curves.straight, &curves.optimal})
        yhi = std::max(yhi, *std::max_element(c->begin(), c->end()));
    if (!(xhi > xlo))
        xhi = xlo + 1.0;
    if (!(yhi > ylo))
        yhi = ylo + 1.0;
    const auto px = [&](double x) { return left + w * (x - xlo) / (xhi - xlo); };
    const auto py = [&](double y) { return top + h - h * (y - ylo) / (yhi - ylo); };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(left + w + 160) << "\" height=\""
       << num(top + h + 60) << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
       << "<title>" << escape(title) << "</title>\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << num(left + w + 160) << "\" height=\"" << num(top + h + 60)
       << "\" fill=\"#ffffff\"/>\n"
       << "<text x=\"" << num(left + w / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape(title)
       << "</text>\n"
       << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(w) << "\" height=\"" << num(h)
       << "\" fill=\"none\" stroke=\"#000000\"/>\n";
    for (double t : ticks(xlo, xhi, 6))
        os << "<text x=\"" << num(px(t)) << "\" y=\"" << num(top + h + 18) << "\" text-anchor=\"middle\">" << num(t, 0)
           << "</text>\n";
    for (double t : ticks(ylo, yhi, 5))
        os << "<line x1=\"" << num(left) << "\" y1=\"" << num(py(t)) << "\" x2=\"" << num(left + w) << "\" y2=\""
           << num(py(t)) << "\" stroke=\"#dddddd\"/>\n"
           << "<text x=\"" << num(left - 6) << "\" y=\"" << num(py(t) + 4) << "\" text-anchor=\"end\">" << num(t, 1)
           << "</text>\n";

    auto polyline = [&](const std::vector<double> &y, const char *colour, const char *cls) {
        os << "<polyline class=\"" << cls << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < y.size(); ++i)
            os << (i ? " " : "") << num(px(curves.x[i])) << ',' << num(py(y[i]));
        os << "\"/>\n";
    };
    polyline(curves.straight, "#3b518b", "straight");
    polyline(curves.optimal, "#e6550d", "optimal");

    os << "<text x=\"" << num(left + w / 2) << "\" y=\"" << num(top + h + 40) << "\" text-anchor=\"middle\">"
       << escape(x_label) << "</text>\n"
       << "<text x=\"16\" y=\"" << num(top + h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
       << num(top + h / 2) << ")\">" << escape(y_label) << "</text>\n"
       << "<line x1=\"" << num(left + w + 15) << "\" y1=\"" << num(top + 10) << "\" x2=\"" << num(left + w + 35)
       << "\" y2=\"" << num(top + 10) << "\" stroke=\"#3b518b\" stroke-width=\"2\"/>\n"
       << "<text x=\"" << num(left + w + 40) << "\" y=\"" << num(top + 14) << "\">straight</text>\n"
       << "<line x1=\"" << num(left + w + 15) << "\" y1=\"" << num(top + 30) << "\" x2=\"" << num(left + w + 35)
       << "\" y2=\"" << num(top + 30) << "\" stroke=\"#e6550d\" stroke-width=\"2\"/>\n"
       << "<text x=\"" << num(left + w + 40) << "\" y=\"" << num(top + 34) << "\">optimal</text>\n"
       << "</svg>\n";
    return os.str();
}

} // namespace mmlink
