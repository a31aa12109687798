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

#include "mmlink/channel_profiles.hpp"

#include "mmlink/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mmlink {

TdlModel parse_tdl_model(std::string_view name)
{
    if (name == "TDL-B")
        return TdlModel::B;
    if (name == "TDL-D")
        return TdlModel::D;
    throw std::invalid_argument("unknown TDL model '" + std::string(name) + "' (expected TDL-B or TDL-D)");
}

std::string_view to_string(TdlModel model)
{
    return model == TdlModel::B ? "TDL-B" : "TDL-D";
}

std::string_view to_string(TapKind kind)
{
    return kind == TapKind::direct ? "direct" : "scattered";
}

const TdlModelTable &TdlTable::model(std::string_view name) const
{
    for (const auto &m : models)
        if (m.name == name)
            return m;
    throw std::invalid_argument("TDL table has no model '" + std::string(name) + "'");
}

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes)
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_line(int lineno, const std::string &what)
{
    throw std::invalid_argument("tdl table line " + std::to_string(lineno) + ": " + what);
}

} // namespace

TdlTable parse_tdl_table(std::istream &is)
{
    TdlTable table;
    std::string covered;
    bool have_checksum = false;
    std::string raw;
    int lineno = 0;

    while (std::getline(is, raw))
    {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        if (have_checksum)
            bad_line(lineno, "content after checksum record");

        std::istringstream ss(line);
        std::string kind;
        ss >> kind;
        if (kind == "checksum")
        {
            std::string algo, hex;
            ss >> algo >> hex;
            if (algo != "fnv1a64" || hex.size() != 16)
                bad_line(lineno, "malformed checksum record");
            table.checksum = std::stoull(hex, nullptr, 16);
            if (table.checksum != fnv1a64(covered))
                bad_line(lineno, "checksum mismatch, table data has been modified");
            have_checksum = true;
            continue;
        }

        covered += line;
        covered += '\n';

        if (kind == "version")
        {
            if (!(ss >> table.version) || table.version != 1)
                bad_line(lineno, "unsupported version");
        }
        else if (kind == "model")
        {
            TdlModelTable m;
            std::string cond;
            if (!(ss >> m.name >> cond) || (cond != "los" && cond != "nlos"))
                bad_line(lineno, "expected 'model <name> <los|nlos> [rician_k_db]'");
            m.los = cond == "los";
            double k = 0.0;
            if (ss >> k)
                m.rician_k_db = k;
            table.models.push_back(std::move(m));
        }
        else if (kind == "tap")
        {
            if (table.models.empty())
                bad_line(lineno, "tap before any model record");
            TdlTableEntry e;
            std::string tk;
            if (!(ss >> e.index >> e.normalized_delay >> e.power_db >> tk))
                bad_line(lineno, "expected 'tap <index> <delay> <power_db> <kind>'");
            if (tk == "direct")
                e.kind = TapKind::direct;
            else if (tk == "scattered")
                e.kind = TapKind::scattered;
            else
                bad_line(lineno, "unknown tap kind '" + tk + "'");
            if (e.normalized_delay < 0.0)
                bad_line(lineno, "negative delay");
            table.models.back().taps.push_back(e);
        }
        else
        {
            bad_line(lineno, "unknown record '" + kind + "'");
        }
    }

    if (!have_checksum)
        throw std::invalid_argument("tdl table: missing checksum record");
    if (table.version == 0)
        throw std::invalid_argument("tdl table: missing version record");
    return table;
}

const TdlTable &builtin_tdl_table()
{
    static const TdlTable table = [] {
        std::istringstream ss{std::string(builtin_tdl_text())};
        return parse_tdl_table(ss);
    }();
    return table;
}

double TapProfile::total_power() const
{
    CompensatedSum s;
    for (const auto &t : taps)
        s.add(t.power);
    return s.value();
}

double TapProfile::direct_power() const
{
    CompensatedSum s;
    for (const auto &t : taps)
        if (t.kind == TapKind::direct)
            s.add(t.power);
    return s.value();
}

double TapProfile::scattered_power() const
{
    CompensatedSum s;
    for (const auto &t : taps)
        if (t.kind == TapKind::scattered)
            s.add(t.power);
    return s.value();
}

namespace {

template <class DelayOf>
double rms_spread(const std::vector<Tap> &taps, DelayOf delay_of)
{
    CompensatedSum p, m1, m2;
    for (const auto &t : taps)
    {
        const double d = delay_of(t);
        p.add(t.power);
        m1.add(t.power * d);
        m2.add(t.power * d * d);
    }
    const double mean = m1.value() / p.value();
    const double var = m2.value() / p.value() - mean * mean;
    return std::sqrt(std::max(var, 0.0));
}

} // namespace

double TapProfile::rms_delay_spread_s() const
{
    if (taps.empty())
        return 0.0;
    return rms_spread(taps, [](const Tap &t) { return t.delay_s; });
}

TapProfile TapProfile::normalized() const
{
    TapProfile out = *this;
    const double total = total_power();
    if (!(total > 0.0))
        throw std::logic_error("tap profile has no power");
    for (auto &t : out.taps)
        t.power /= total;
    return out;
}

void TapProfile::validate() const
{
    if (taps.empty())
        throw std::logic_error("tap profile is empty");
    if (taps.front().delay_s != 0.0)
        throw std::logic_error("first tap delay must be 0");
    for (std::size_t i = 1; i < taps.size(); ++i)
        if (sigma_tau_s > 0.0 && !(taps[i].delay_s > taps[i - 1].delay_s))
            throw std::logic_error("tap delays must be strictly increasing");
    for (const auto &t : taps)
        if (!(t.power >= 0.0) || !(t.delay_s >= 0.0))
            throw std::logic_error("tap powers and delays must be nonnegative");
    if (std::abs(total_power() - 1.0) > 1e-12)
        throw std::logic_error("tap powers must sum to 1");
    const auto n_direct = std::count_if(taps.begin(), taps.end(), [](const Tap &t) { return t.kind == TapKind::direct; });
    if (n_direct > 1 || (n_direct == 1 && taps.front().kind != TapKind::direct))
        throw std::logic_error("at most one direct tap, and it must come first");
}

TapProfile scaled_tdl(TdlModel model, double sigma_tau_s, std::optional<double> rician_k_db, const TdlTable &table)
{
    if (!(sigma_tau_s >= 0.0))
        throw std::invalid_argument("sigma_tau_s: must be nonnegative");

    const TdlModelTable &src = table.model(to_string(model));

    const TdlTableEntry *direct = nullptr;
    for (const auto &e : src.taps)
        if (e.kind == TapKind::direct)
        {
            if (direct)
                throw std::invalid_argument(src.name + ": more than one direct tap");
            direct = &e;
        }

    struct Work
    {
        double nd;
        double power;
        TapKind kind;
    };
    std::vector<Work> work;
    for (const auto &e : src.taps)
    {
        if (e.kind == TapKind::direct)
            continue;
        // Scattered energy at the direct path's delay is part of the Rician tap.
        if (direct && e.normalized_delay == direct->normalized_delay)
            continue;
        work.push_back({e.normalized_delay, db_to_linear(e.power_db), TapKind::scattered});
    }

    TapProfile profile;
    profile.model = model;
    profile.sigma_tau_s = sigma_tau_s;

    if (direct)
    {
        const double k_db = rician_k_db ? *rician_k_db : src.rician_k_db.value_or(0.0);
        CompensatedSum scattered;
        for (const auto &w : work)
            scattered.add(w.power);
        work.push_back({direct->normalized_delay, db_to_linear(k_db) * scattered.value(), TapKind::direct});
        profile.rician_kappa_db = k_db;
    }

    std::stable_sort(work.begin(), work.end(), [](const Work &a, const Work &b) { return a.nd < b.nd; });
    for (std::size_t i = 1; i < work.size(); ++i)
        if (!(work[i].nd > work[i - 1].nd))
            throw std::invalid_argument(src.name + ": duplicate tap delays");
    if (work.empty() || work.front().nd != 0.0)
        throw std::invalid_argument(src.name + ": first tap must have zero delay");

    CompensatedSum total;
    for (const auto &w : work)
        total.add(w.power);
    for (const auto &w : work)
        profile.taps.push_back({w.nd, w.power / total.value(), w.kind});

    // profile.taps currently hold normalized delays.
    const double unit_spread = rms_spread(profile.taps, [](const Tap &t) { return t.delay_s; });
    const double scale = unit_spread > 0.0 ? sigma_tau_s / unit_spread : 0.0;
    for (auto &t : profile.taps)
        t.delay_s *= scale;

    return profile;
}

} // namespace mmlink
