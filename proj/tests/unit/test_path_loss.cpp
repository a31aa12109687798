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
#include "support/oracles.hpp"

#include "mmlink/path_loss.hpp"

#include <cmath>

using namespace mmlink;

TEST_CASE("free-space loss at 100 m, 28 GHz")
{
    CHECK(free_space_path_loss(100.0, 28e9) == doctest::Approx(oracle::fspl_100m_28ghz_db).epsilon(1e-12));
    // 20 dB per decade of distance
    CHECK(free_space_path_loss(1000.0, 28e9) - free_space_path_loss(100.0, 28e9) == doctest::Approx(20.0));
    CHECK_THROWS_AS(free_space_path_loss(0.0, 28e9), std::invalid_argument);
    CHECK_THROWS_AS(free_space_path_loss(10.0, -1.0), std::invalid_argument);
}

TEST_CASE("UMa LOS at the default geometry")
{
    const auto r = uma_path_loss(100.0, 28e9, true, 7.0, 1.5);
    CHECK(r.loss_db == doctest::Approx(oracle::uma_los_100m_db).epsilon(1e-12));
    CHECK(r.outside_validity);
    CHECK(r.note.find("25 m") != std::string::npos);
}

TEST_CASE("UMa NLOS is the larger of the two formulas")
{
    const double d3d = std::hypot(100.0, 5.5);
    const double nlos_ref = 13.54 + 39.08 * std::log10(d3d) + 20.0 * std::log10(28.0);
    const auto r = uma_path_loss(100.0, 28e9, false, 7.0, 1.5);
    CHECK(r.loss_db == doctest::Approx(std::max(nlos_ref, oracle::uma_los_100m_db)).epsilon(1e-12));
    for (double d = 10.0; d <= 5000.0; d *= 1.7)
        CHECK(uma_path_loss(d, 28e9, false, 25.0, 1.5).loss_db >= uma_path_loss(d, 28e9, true, 25.0, 1.5).loss_db);
}

TEST_CASE("UMa LOS is continuous at the breakpoint")
{
    const double d_bp = 4.0 * 24.0 * 0.5 * 28e9 / oracle::c0;
    const double below = uma_path_loss(d_bp * (1.0 - 1e-9), 28e9, true, 25.0, 1.5).loss_db;
    const double above = uma_path_loss(d_bp * (1.0 + 1e-9), 28e9, true, 25.0, 1.5).loss_db;
    CHECK(below == doctest::Approx(above).epsilon(1e-8));
    // Beyond the breakpoint the slope is 40 dB per decade.
    const double a = uma_path_loss(4800.0, 28e9, true, 25.0, 1.5).loss_db;
    const double b = uma_path_loss(4900.0, 28e9, true, 25.0, 1.5).loss_db;
    CHECK((b - a) / std::log10(std::hypot(4900.0, 23.5) / std::hypot(4800.0, 23.5)) == doctest::Approx(40.0));
}

TEST_CASE("validity flags")
{
    CHECK_FALSE(uma_path_loss(100.0, 28e9, true, 25.0, 1.5).outside_validity);
    CHECK(uma_path_loss(5.0, 28e9, true, 25.0, 1.5).outside_validity);
    CHECK(uma_path_loss(100.0, 28e9, true, 25.0, 30.0).outside_validity);
    CHECK_THROWS_AS(uma_path_loss(100.0, 28e9, true, 0.0, 1.5), std::invalid_argument);
}

TEST_CASE("path loss model dispatch")
{
    CHECK(PathLossModel(PathLossKind::free_space).evaluate(100.0, 28e9, 7.0, 1.5).loss_db ==
          doctest::Approx(oracle::fspl_3d_100m_db).epsilon(1e-12));
    CHECK(PathLossModel(PathLossKind::uma_los).evaluate(100.0, 28e9, 7.0, 1.5).loss_db ==
          doctest::Approx(oracle::uma_los_100m_db).epsilon(1e-12));
    CHECK(PathLossModel(PathLossKind::uma_nlos).kind() == PathLossKind::uma_nlos);
}
