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

#include "mmlink/link_metrics.hpp"
#include "mmlink/numeric.hpp"

#include <cmath>
#include <vector>

using namespace mmlink;

namespace {

// One unit-weight path straight along the TX-RX axis (equal heights).
std::vector<PathRealization> direct_only()
{
    PathRealization p;
    p.aod = {180.0, 0.0};
    p.aoa = {0.0, 0.0};
    p.power_weight = 1.0;
    p.kind = TapKind::direct;
    return {p};
}

} // namespace

TEST_CASE("aligned direct path receives both peak gains")
{
    const AntennaSetup ant;
    const auto paths = direct_only();
    const double p = received_power(paths, ant.tx_for_alpha(180.0), ant.rx_for_beta(0.0));
    CHECK(p == doctest::Approx(std::pow(10.0, (oracle::g_tx_dbi + oracle::g_rx_dbi) / 10.0)).epsilon(5e-3));
    // Rotating the RX by 45 deg puts the path on the -3 dB point of the UE beam (12 (45/90)^2 = 3 dB).
    const double off = received_power(paths, ant.tx_for_alpha(180.0), ant.rx_for_beta(45.0));
    CHECK(linear_to_db(p / off) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK_THROWS_AS(received_power({}, ant.tx_for_alpha(180.0), ant.rx_for_beta(0.0)), std::invalid_argument);
}

TEST_CASE("mounted antennas rotate the pattern")
{
    const MountedAntenna m(RadiationPattern::element(ElementParams::ue_default()), 30.0);
    CHECK(m.gain_dbi({30.0, 0.0}) == doctest::Approx(oracle::g_rx_dbi));
    CHECK(m.gain_dbi({75.0, 0.0}) == doctest::Approx(oracle::g_rx_dbi - 3.0));
    const AntennaSetup ant;
    CHECK(ant.tx_for_alpha(200.0).pattern().steering().azimuth_deg == doctest::Approx(20.0));
    CHECK(ant.tx_for_alpha(200.0).boresight_azimuth_deg() == 180.0);
    CHECK_THROWS_AS(ant.tx_for_alpha(60.0), std::invalid_argument);
}

TEST_CASE("K(180, 0) is 0 dB on any ensemble")
{
    LinkScenario sc;
    sc.condition = Condition::nlos;
    const auto ens = generate_ensemble(scaled_tdl(TdlModel::B, 266e-9), sc, {4, 8, 5});
    const AntennaSetup ant;
    CHECK(relative_power_factor(180.0, 0.0, ens, ant) == 0.0);
    CHECK(ensemble_omni_power(ens) == doctest::Approx(1.0).epsilon(1e-12));
    const double p = ensemble_mean_power(ens, ant.tx_for_alpha(150.0), ant.rx_for_beta(20.0));
    const double ref = ensemble_mean_power(ens, ant.tx_for_alpha(180.0), ant.rx_for_beta(0.0));
    CHECK(relative_power_factor(150.0, 20.0, ens, ant) == doctest::Approx(linear_to_db(p / ref)).epsilon(1e-12));
}

TEST_CASE("environment factor from free-space and UMa losses")
{
    LinkScenario sc;
    sc.condition = Condition::los;
    const auto e = environment_factor(sc);
    CHECK(e.pl_free_space_db == doctest::Approx(oracle::fspl_3d_100m_db).epsilon(1e-12));
    CHECK(e.pl_multipath_db == doctest::Approx(oracle::uma_los_100m_db).epsilon(1e-12));
    CHECK(e.k_e == doctest::Approx(std::pow(10.0, (oracle::fspl_3d_100m_db - oracle::uma_los_100m_db) / 10.0)));
    CHECK(e.outside_validity);

    const auto sq = environment_factor(sc, KeMode::product);
    CHECK(sq.k_e == doctest::Approx(e.k_e * e.k_e).epsilon(1e-12));

    const auto fs = environment_factor(sc, KeMode::ratio, PathLossKind::free_space);
    CHECK(fs.k_e == doctest::Approx(1.0).epsilon(1e-12));

    sc.condition = Condition::nlos;
    CHECK(environment_factor(sc).k_e < e.k_e);
}

TEST_CASE("K_e mode names")
{
    CHECK(parse_ke_mode("ratio") == KeMode::ratio);
    CHECK(parse_ke_mode("product") == KeMode::product);
    CHECK(to_string(KeMode::product) == "product");
    CHECK_THROWS_AS(parse_ke_mode("sum"), std::invalid_argument);
}

TEST_CASE("link budget chain")
{
    const auto b = LinkBudget::from(400.0, 1.0, 0.5, 100.0);
    CHECK_NOTHROW(b.validate());
    CHECK(b.p_n == 1.0);
    CHECK(b.k_a == 400.0);
    CHECK(b.snr_0 == doctest::Approx(20000.0));
    CHECK(std::log2(1.0 + b.snr_0) == doctest::Approx(spectral_efficiency(b.k_a, b.k_e, b.snr)).epsilon(1e-15));

    LinkBudget broken = b;
    broken.snr_0 *= 1.0 + 1e-9;
    CHECK_THROWS_AS(broken.validate(), std::logic_error);
    CHECK_THROWS_AS(LinkBudget::from(1.0, 0.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("spectral efficiency")
{
    CHECK(spectral_efficiency(1.0, 1.0, 0.0) == 0.0);
    CHECK(spectral_efficiency(1.0, 1.0, 1.0) == 1.0);
    CHECK(spectral_efficiency(3.0, 1.0, 1.0) == 2.0);
    CHECK_THROWS_AS(spectral_efficiency(-1.0, 1.0, 1.0), std::invalid_argument);

    const auto b = LinkBudget::from(10.0, 1.0, 1.0, 100.0);
    const auto r = evaluate_link(b, 20.0, 180.0, 0.0, 100.0);
    CHECK(r.c_f == doctest::Approx(std::log2(101.0)));
    CHECK(r.c_0 == doctest::Approx(std::log2(1001.0)));
    CHECK(r.c_0 > r.c_f);
}
