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

#include "mmlink/config.hpp"

#include "mmlink/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace mmlink {

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(s);
    while (std::getline(ss, cur, sep))
        out.push_back(trim(cur));
    return out;
}

double to_double(const std::string &field, const std::string &text)
{
    try
    {
        const double v = parse_double(text);
        if (!std::isfinite(v))
            throw std::invalid_argument("not finite");
        return v;
    }
    catch (const std::invalid_argument &)
    {
        throw ConfigError(field, "'" + text + "' is not a number");
    }
}

long long to_integer(const std::string &field, const std::string &text)
{
    long long v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw ConfigError(field, "'" + text + "' is not an integer");
    return v;
}

bool to_bool(const std::string &field, const std::string &text)
{
    if (text == "true" || text == "yes" || text == "1")
        return true;
    if (text == "false" || text == "no" || text == "0")
        return false;
    throw ConfigError(field, "'" + text + "' is not a boolean (true/false)");
}

// "a:step:b" (inclusive) or a comma-separated list.
std::vector<double> to_list(const std::string &field, const std::string &text)
{
    if (text.find(':') != std::string::npos)
    {
        const auto parts = split(text, ':');
        if (parts.size() != 3)
            throw ConfigError(field, "range must be start:step:stop");
        const double a = to_double(field, parts[0]);
        const double step = to_double(field, parts[1]);
        const double b = to_double(field, parts[2]);
        if (!(step > 0.0) || b < a)
            throw ConfigError(field, "range needs a positive step and start <= stop");
        const double n = (b - a) / step;
        if (std::abs(n - std::round(n)) > 1e-9 * std::max(1.0, n))
            throw ConfigError(field, "step does not divide the range");
        std::vector<double> v;
        for (long long i = 0; i <= std::llround(n); ++i)
            v.push_back(a + static_cast<double>(i) * step);
        return v;
    }
    std::vector<double> v;
    for (const auto &p : split(text, ','))
        v.push_back(to_double(field, p));
    if (v.empty())
        throw ConfigError(field, "list is empty");
    return v;
}

std::string from_list(const std::vector<double> &v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + format_shortest(v[i]);
    return out;
}

struct Key
{
    std::string section;
    std::string name;
    std::function<void(ExperimentConfig &, const std::string &field, const std::string &value)> set;
    std::function<std::string(const ExperimentConfig &)> get;
};

#define MMLINK_DOUBLE_KEY(sec, key, member)                                                                    \
    Key                                                                                                        \
    {                                                                                                          \
        sec, key, [](ExperimentConfig &c, const std::string &f, const std::string &v) { c.member = to_double(f, v); }, \
            [](const ExperimentConfig &c) { return format_shortest(c.member); }                                   \
    }

#define MMLINK_INT_KEY(sec, key, member)                                                                       \
    Key                                                                                                        \
    {                                                                                                          \
        sec, key,                                                                                              \
            [](ExperimentConfig &c, const std::string &f, const std::string &v) {                              \
                const long long x = to_integer(f, v);                                                          \
                if (x < -1000000000LL || x > 1000000000LL)                                                     \
                    throw ConfigError(f, "value out of range");                                                \
                c.member = static_cast<int>(x);                                                                \
            },                                                                                                 \
            [](const ExperimentConfig &c) { return std::to_string(c.member); }                                 \
    }

#define MMLINK_BOOL_KEY(sec, key, member)                                                                      \
    Key                                                                                                        \
    {                                                                                                          \
        sec, key, [](ExperimentConfig &c, const std::string &f, const std::string &v) { c.member = to_bool(f, v); }, \
            [](const ExperimentConfig &c) { return std::string(c.member ? "true" : "false"); }                 \
    }

const std::vector<Key> &schema()
{
    static const std::vector<Key> keys = {
        MMLINK_DOUBLE_KEY("scenario", "distance_m", distance_m),
        MMLINK_DOUBLE_KEY("scenario", "tx_height_m", tx_height_m),
        MMLINK_DOUBLE_KEY("scenario", "rx_height_m", rx_height_m),
        MMLINK_DOUBLE_KEY("scenario", "carrier_ghz", carrier_ghz),
        Key{"scenario", "conditions",
            [](ExperimentConfig &c, const std::string &f, const std::string &v) {
                c.conditions.clear();
                for (const auto &p : split(v, ','))
                {
                    if (p == "los")
                        c.conditions.push_back(Condition::los);
                    else if (p == "nlos")
                        c.conditions.push_back(Condition::nlos);
                    else
                        throw ConfigError(f, "unknown condition '" + p + "' (expected los, nlos)");
                }
            },
            [](const ExperimentConfig &c) {
                std::string out;
                for (std::size_t i = 0; i < c.conditions.size(); ++i)
                    out += (i ? "," : "") + std::string(to_string(c.conditions[i]));
                return out;
            }},

        MMLINK_INT_KEY("antenna", "gnb_rows", gnb_geometry.n_rows),
        MMLINK_INT_KEY("antenna", "gnb_cols", gnb_geometry.n_cols),
        MMLINK_DOUBLE_KEY("antenna", "gnb_row_spacing_wl", gnb_geometry.row_spacing),
        MMLINK_DOUBLE_KEY("antenna", "gnb_col_spacing_wl", gnb_geometry.col_spacing),
        MMLINK_DOUBLE_KEY("antenna", "gnb_element_hpbw_azimuth_deg", gnb_element.hpbw_azimuth_deg),
        MMLINK_DOUBLE_KEY("antenna", "gnb_element_hpbw_elevation_deg", gnb_element.hpbw_elevation_deg),
        MMLINK_DOUBLE_KEY("antenna", "gnb_element_front_back_db", gnb_element.front_back_ratio_db),
        MMLINK_DOUBLE_KEY("antenna", "gnb_element_sidelobe_db", gnb_element.sidelobe_floor_db),
        MMLINK_DOUBLE_KEY("antenna", "gnb_element_gain_dbi", gnb_element.peak_gain_dbi),
        MMLINK_DOUBLE_KEY("antenna", "ue_hpbw_azimuth_deg", ue_element.hpbw_azimuth_deg),
        MMLINK_DOUBLE_KEY("antenna", "ue_hpbw_elevation_deg", ue_element.hpbw_elevation_deg),
        MMLINK_DOUBLE_KEY("antenna", "ue_front_back_db", ue_element.front_back_ratio_db),
        MMLINK_DOUBLE_KEY("antenna", "ue_sidelobe_db", ue_element.sidelobe_floor_db),
        MMLINK_DOUBLE_KEY("antenna", "ue_gain_dbi", ue_element.peak_gain_dbi),

        Key{"channel", "los_model",
            [](ExperimentConfig &c, const std::string &f, const std::string &v) {
                try
                {
                    c.los_model = parse_tdl_model(v);
                }
                catch (const std::invalid_argument &e)
                {
                    throw ConfigError(f, e.what());
                }
            },
            [](const ExperimentConfig &c) { return std::string(to_string(c.los_model)); }},
        Key{"channel", "nlos_model",
            [](ExperimentConfig &c, const std::string &f, const std::string &v) {
                try
                {
                    c.nlos_model = parse_tdl_model(v);
                }
                catch (const std::invalid_argument &e)
                {
                    throw ConfigError(f, e.what());
                }
            },
            [](const ExperimentConfig &c) { return std::string(to_string(c.nlos_model)); }},
        MMLINK_DOUBLE_KEY("channel", "sigma_tau_ns", sigma_tau_ns),
        MMLINK_DOUBLE_KEY("channel", "rician_k_db", rician_k_db),
        Key{"channel", "ke_mode",
            [](ExperimentConfig &c, const std::string &f, const std::string &v) {
                try
                {
                    c.ke_mode = parse_ke_mode(v);
                }
                catch (const std::invalid_argument &e)
                {
                    throw ConfigError(f, e.what());
                }
            },
            [](const ExperimentConfig &c) { return std::string(to_string(c.ke_mode)); }},

        MMLINK_INT_KEY("monte_carlo", "paths_per_ellipsoid", monte_carlo.paths_per_ellipsoid),
        MMLINK_INT_KEY("monte_carlo", "trials", monte_carlo.trials),
        Key{"monte_carlo", "seed",
            [](ExperimentConfig &c, const std::string &f, const std::string &v) {
                std::uint64_t x = 0;
                const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
                if (res.ec != std::errc() || res.ptr != v.data() + v.size())
                    throw ConfigError(f, "'" + v + "' is not an unsigned 64-bit integer");
                c.monte_carlo.seed = x;
            },
            [](const ExperimentConfig &c) { return std::to_string(c.monte_carlo.seed); }},

        MMLINK_DOUBLE_KEY("sweep", "alpha_min_deg", grid.alpha.min_deg),
        MMLINK_DOUBLE_KEY("sweep", "alpha_max_deg", grid.alpha.max_deg),
        MMLINK_DOUBLE_KEY("sweep", "alpha_step_deg", grid.alpha.step_deg),
        MMLINK_DOUBLE_KEY("sweep", "beta_min_deg", grid.beta.min_deg),
        MMLINK_DOUBLE_KEY("sweep", "beta_max_deg", grid.beta.max_deg),
        MMLINK_DOUBLE_KEY("sweep", "beta_step_deg", grid.beta.step_deg),
        Key{"sweep", "distances_m",
            [](ExperimentConfig &c, const std::string &f, const std::string &v) { c.grid.distances_m = to_list(f, v); },
            [](const ExperimentConfig &c) { return from_list(c.grid.distances_m); }},
        Key{"sweep", "snr_db",
            [](ExperimentConfig &c, const std::string &f, const std::string &v) { c.grid.snr_db = to_list(f, v); },
            [](const ExperimentConfig &c) { return from_list(c.grid.snr_values_db()); }},
        MMLINK_DOUBLE_KEY("sweep", "distance_snr_db", distance_snr_db),

        Key{"output", "directory",
            [](ExperimentConfig &c, const std::string &f, const std::string &v) {
                if (v.empty())
                    throw ConfigError(f, "must not be empty");
                c.output_directory = v;
            },
            [](const ExperimentConfig &c) { return c.output_directory; }},
        MMLINK_BOOL_KEY("output", "csv", write_csv),
        MMLINK_BOOL_KEY("output", "svg", write_svg),
        MMLINK_BOOL_KEY("output", "dump_paths", dump_paths),
    };
    return keys;
}

#undef MMLINK_DOUBLE_KEY
#undef MMLINK_INT_KEY
#undef MMLINK_BOOL_KEY

void require(bool ok, const char *field, const std::string &what)
{
    if (!ok)
        throw ConfigError(field, what);
}

void check_element(const ElementParams &e, const std::string &prefix)
{
    const auto f = [&](const char *k) { return prefix + k; };
    if (!(e.hpbw_azimuth_deg > 0.0 && e.hpbw_azimuth_deg < 180.0))
        throw ConfigError(f("hpbw_azimuth_deg"), "must lie in (0, 180)");
    if (!(e.hpbw_elevation_deg > 0.0 && e.hpbw_elevation_deg < 180.0))
        throw ConfigError(f("hpbw_elevation_deg"), "must lie in (0, 180)");
    if (!(e.front_back_ratio_db > 0.0))
        throw ConfigError(f("front_back_db"), "must be positive");
    if (!(e.sidelobe_floor_db > 0.0))
        throw ConfigError(f("sidelobe_db"), "must be positive");
}

} // namespace

ExperimentConfig ExperimentConfig::defaults()
{
    return {};
}

void ExperimentConfig::validate() const
{
    require(distance_m > 0.0, "scenario.distance_m", "must be positive");
    require(tx_height_m > 0.0, "scenario.tx_height_m", "must be positive");
    require(rx_height_m > 0.0, "scenario.rx_height_m", "must be positive");
    require(carrier_ghz > 0.0, "scenario.carrier_ghz", "must be positive");
    require(!conditions.empty(), "scenario.conditions", "must list at least one of los, nlos");
    require(std::set<Condition>(conditions.begin(), conditions.end()).size() == conditions.size(),
            "scenario.conditions", "duplicate entries");

    require(gnb_geometry.n_rows >= 1, "antenna.gnb_rows", "must be at least 1");
    require(gnb_geometry.n_cols >= 1, "antenna.gnb_cols", "must be at least 1");
    require(gnb_geometry.row_spacing > 0.0, "antenna.gnb_row_spacing_wl", "must be positive");
    require(gnb_geometry.col_spacing > 0.0, "antenna.gnb_col_spacing_wl", "must be positive");
    check_element(gnb_element, "antenna.gnb_element_");
    check_element(ue_element, "antenna.ue_");

    require(sigma_tau_ns >= 0.0, "channel.sigma_tau_ns", "must be nonnegative");
    try
    {
        for (Condition c : conditions)
        {
            const TapProfile p = profile(c);
            const TdlModelTable &t = builtin_tdl_table().model(to_string(p.model));
            if ((c == Condition::los) != t.los)
                throw ConfigError(c == Condition::los ? "channel.los_model" : "channel.nlos_model",
                                  std::string(to_string(p.model)) + " is not a " +
                                      (c == Condition::los ? "LOS" : "NLOS") + " profile");
            // Some tap must be resolvable as a path in this condition.
            scenario(c).validate();
            realize_paths(p, scenario(c), {1, 1, monte_carlo.seed}, 0);
        }
    }
    catch (const ConfigError &)
    {
        throw;
    }
    catch (const std::exception &e)
    {
        throw ConfigError("channel.sigma_tau_ns", e.what());
    }

    require(monte_carlo.paths_per_ellipsoid >= 1, "monte_carlo.paths_per_ellipsoid", "must be at least 1");
    require(monte_carlo.trials >= 1, "monte_carlo.trials", "must be at least 1");

    try
    {
        grid.validate();
    }
    catch (const std::invalid_argument &e)
    {
        const std::string msg = e.what();
        const auto colon = msg.find(':');
        throw ConfigError("sweep." + msg.substr(0, colon), trim(msg.substr(colon + 1)));
    }
    for (double s : grid.snr_values_db())
        require(std::isfinite(s), "sweep.snr_db", "values must be finite");
    require(std::isfinite(distance_snr_db), "sweep.distance_snr_db", "must be finite");
    require(!output_directory.empty(), "output.directory", "must not be empty");
}

LinkScenario ExperimentConfig::scenario(Condition c) const
{
    return scenario(c, distance_m);
}

LinkScenario ExperimentConfig::scenario(Condition c, double d) const
{
    return {d, tx_height_m, rx_height_m, carrier_ghz * 1e9, c};
}

TapProfile ExperimentConfig::profile(Condition c) const
{
    const TdlModel m = c == Condition::los ? los_model : nlos_model;
    return scaled_tdl(m, sigma_tau_ns * 1e-9, rician_k_db);
}

AntennaSetup ExperimentConfig::antennas() const
{
    return {gnb_geometry, gnb_element, ue_element, carrier_ghz * 1e9};
}

ExperimentConfig parse_config(std::istream &is)
{
    ExperimentConfig cfg;
    std::map<std::string, const Key *> index;
    std::set<std::string> sections;
    for (const auto &k : schema())
    {
        index[k.section + "." + k.name] = &k;
        sections.insert(k.section);
    }

    std::set<std::string> seen;
    std::string section;
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw))
    {
        ++lineno;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty())
            continue;
        if (line.front() == '[')
        {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno), "malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (!sections.count(section))
                throw ConfigError(section, "unknown section");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno), "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty())
            throw ConfigError(key, "key outside of any section");
        const std::string field = section + "." + key;
        const auto it = index.find(field);
        if (it == index.end())
            throw ConfigError(field, "unknown key");
        if (!seen.insert(field).second)
            throw ConfigError(field, "duplicate key");
        it->second->set(cfg, field, value);
    }
    if (is.bad())
        throw ConfigError("config", "read error");
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config", "cannot open '" + path + "'");
    return parse_config(in);
}

void serialize_config(std::ostream &os, const ExperimentConfig &cfg)
{
    std::string section;
    for (const auto &k : schema())
    {
        if (k.section != section)
        {
            if (!section.empty())
                os << '\n';
            section = k.section;
            os << '[' << section << "]\n";
        }
        os << k.name << " = " << k.get(cfg) << '\n';
    }
}

} // namespace mmlink
