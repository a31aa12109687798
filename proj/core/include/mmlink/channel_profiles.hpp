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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmlink {

enum class TdlModel
{
    B, // NLOS, Rayleigh taps only
    D, // LOS, one direct (Rician) tap first
};

enum class TapKind
{
    direct,
    scattered,
};

TdlModel parse_tdl_model(std::string_view name); // "TDL-B" / "TDL-D"
std::string_view to_string(TdlModel model);
std::string_view to_string(TapKind kind);

// ---- Versioned tap tables --------------------------------------------------

struct TdlTableEntry
{
    int index = 0;
    double normalized_delay = 0.0;
    double power_db = 0.0;
    TapKind kind = TapKind::scattered;
};

struct TdlModelTable
{
    std::string name;
    bool los = false;
    std::optional<double> rician_k_db;
    std::vector<TdlTableEntry> taps;
};

struct TdlTable
{
    int version = 0;
    std::uint64_t checksum = 0;
    std::vector<TdlModelTable> models;

    // Throws std::invalid_argument for an unknown model.
    const TdlModelTable &model(std::string_view name) const;
};

std::uint64_t fnv1a64(std::string_view bytes);

// Parses the plain-text table format (see core/data/tdl_models.txt) and
// verifies its checksum. Throws std::invalid_argument on malformed input.
TdlTable parse_tdl_table(std::istream &is);

// Text of core/data/tdl_models.txt, embedded at build time.
std::string_view builtin_tdl_text();
const TdlTable &builtin_tdl_table();

// ---- Scaled power-delay profiles ------------------------------------------

struct Tap
{
    double delay_s = 0.0; // excess delay relative to the direct TX-RX path
    double power = 0.0;   // linear, relative
    TapKind kind = TapKind::scattered;
};

struct TapProfile
{
    TdlModel model = TdlModel::B;
    std::vector<Tap> taps;
    double sigma_tau_s = 0.0;
    std::optional<double> rician_kappa_db; // empty when there is no direct tap

    double total_power() const;
    double direct_power() const;
    double scattered_power() const;
    double rms_delay_spread_s() const;

    // Powers rescaled to sum to one.
    TapProfile normalized() const;

    // Checks ordering, normalization and direct-tap placement.
    // Throws std::logic_error describing the first violation.
    void validate() const;
};

// Tap table scaled to the requested RMS delay spread. A scattered entry that
// shares its delay with the direct tap is absorbed into it, the direct power
// is set so that direct / sum(scattered) equals the Rician factor, powers are
// normalized, and delays are scaled so the profile's RMS delay spread is
// exactly sigma_tau.
TapProfile scaled_tdl(TdlModel model, double sigma_tau_s, std::optional<double> rician_k_db = std::nullopt,
                      const TdlTable &table = builtin_tdl_table());

} // namespace mmlink
