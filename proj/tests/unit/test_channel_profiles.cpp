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

#include "doctest.h"

#include "mmlink/channel_profiles.hpp"
#include "mmlink/numeric.hpp"

#include <cmath>
#include <sstream>
#include <string>

using namespace mmlink;

TEST_CASE("fnv1a64 reference vectors")
{
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("built-in table parses and carries both models")
{
    const TdlTable &t = builtin_tdl_table();
    CHECK(t.version == 1);
    const auto &b = t.model("TDL-B");
    const auto &d = t.model("TDL-D");
    CHECK_FALSE(b.los);
    CHECK(b.taps.size() == 23);
    CHECK(d.los);
    CHECK(d.rician_k_db.value() == 13.3);
    CHECK(d.taps.size() == 14);
    CHECK(d.taps.front().kind == TapKind::direct);
    CHECK(b.taps[1].normalized_delay == 0.1072);
    CHECK(b.taps[1].power_db == -2.2);
    CHECK_THROWS_AS(t.model("TDL-Z"), std::invalid_argument);
}

TEST_CASE("table checksum guards the data")
{
    std::string text(builtin_tdl_text());
    {
        std::istringstream is(text);
        CHECK(parse_tdl_table(is).checksum == builtin_tdl_table().checksum);
    }
    const auto pos = text.find("-2.2");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 4, "-2.3");
    std::istringstream is(text);
    CHECK_THROWS_AS(parse_tdl_table(is), std::invalid_argument);

    std::istringstream junk("version 1\nmodel TDL-B nlos\ntap one 0 0 scattered\n");
    CHECK_THROWS_AS(parse_tdl_table(junk), std::invalid_argument);
}

TEST_CASE("model names")
{
    CHECK(parse_tdl_model("TDL-B") == TdlModel::B);
    CHECK(parse_tdl_model("TDL-D") == TdlModel::D);
    CHECK(to_string(TdlModel::D) == "TDL-D");
    CHECK_THROWS_AS(parse_tdl_model("TDL-A"), std::invalid_argument);
}

TEST_CASE("TDL-B scaled to 266 ns")
{
    const auto p = scaled_tdl(TdlModel::B, 266e-9);
    CHECK_NOTHROW(p.validate());
    CHECK(p.total_power() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p.direct_power() == 0.0);
    CHECK_FALSE(p.rician_kappa_db.has_value());
    CHECK(std::abs(p.rms_delay_spread_s() - 266e-9) / 266e-9 < 1e-12);
    for (std::size_t i = 1; i < p.taps.size(); ++i)
        CHECK(p.taps[i].delay_s > p.taps[i - 1].delay_s);
    CHECK(p.taps.front().delay_s == 0.0);
}

TEST_CASE("TDL-D keeps the Rician factor exactly")
{
    for (double k : {13.3, 0.0, 20.0})
    {
        const auto p = scaled_tdl(TdlModel::D, 100e-9, k);
        CHECK_NOTHROW(p.validate());
        CHECK(p.taps.front().kind == TapKind::direct);
        CHECK(p.taps.front().delay_s == 0.0);
        CHECK(linear_to_db(p.direct_power() / p.scattered_power()) == doctest::Approx(k).epsilon(1e-12));
        CHECK(std::abs(p.rms_delay_spread_s() - 100e-9) / 100e-9 < 1e-12);
        // The zero-delay scattered entry is folded into the direct tap.
        CHECK(p.taps.size() == 13);
    }
    CHECK(scaled_tdl(TdlModel::D, 266e-9).rician_kappa_db.value() == 13.3);
}

TEST_CASE("zero delay spread collapses all delays")
{
    const auto p = scaled_tdl(TdlModel::B, 0.0);
    CHECK(p.rms_delay_spread_s() == 0.0);
    CHECK_THROWS_AS(scaled_tdl(TdlModel::B, -1e-9), std::invalid_argument);
}

TEST_CASE("normalized() and validate()")
{
    TapProfile p;
    p.taps = {{0.0, 2.0, TapKind::scattered}, {1e-8, 2.0, TapKind::scattered}};
    CHECK_THROWS_AS(p.validate(), std::logic_error);
    const auto n = p.normalized();
    CHECK(n.total_power() == doctest::Approx(1.0));
    CHECK_NOTHROW(n.validate());

    TapProfile bad = n;
    std::swap(bad.taps[0], bad.taps[1]);
    CHECK_THROWS_AS(bad.validate(), std::logic_error);
}
