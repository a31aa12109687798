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

#include "mmlink/numeric.hpp"
#include "mmlink/sweep.hpp"

#include <algorithm>
#include <cmath>

using namespace mmlink;

namespace {

SweepGrid small_grid()
{
    return {{150.0, 210.0, 10.0}, {-30.0, 30.0, 10.0}, {50.0, 100.0}, {0.0, 10.0, 20.0}};
}

PathEnsemble small_ensemble(Condition c)
{
    LinkScenario sc;
    sc.condition = c;
    const auto profile = c == Condition::los ? scaled_tdl(TdlModel::D, 266e-9) : scaled_tdl(TdlModel::B, 266e-9);
    return generate_ensemble(profile, sc, {4, 10, 11});
}

} // namespace

TEST_CASE("angle ranges are inclusive")
{
    const auto v = AngleRange{90.0, 270.0, 1.0}.values();
    CHECK(v.size() == 181);
    CHECK(v.front() == 90.0);
    CHECK(v.back() == 270.0);
    CHECK(AngleRange{-90.0, 90.0, 0.5}.values().size() == 361);
}

TEST_CASE("grid validation names the field")
{
    SweepGrid g;
    CHECK_NOTHROW(g.validate());
    g.alpha.step_deg = 0.7;
    CHECK_THROWS_WITH_AS(g.validate(), "alpha_step_deg: 0.7 does not divide the range [90, 270]",
                         std::invalid_argument);
    g = {};
    g.alpha = {95.0, 265.0, 10.0};
    CHECK_THROWS_WITH_AS(g.validate(), doctest::Contains("alpha_step_deg"), std::invalid_argument);
    g = {};
    g.alpha.min_deg = 80.0;
    CHECK_THROWS_WITH_AS(g.validate(), doctest::Contains("alpha_min_deg"), std::invalid_argument);
    g = {};
    g.beta.step_deg = 0.0;
    CHECK_THROWS_WITH_AS(g.validate(), doctest::Contains("beta_step_deg"), std::invalid_argument);
    g = {};
    g.distances_m = {};
    CHECK_THROWS_WITH_AS(g.validate(), doctest::Contains("distances_m"), std::invalid_argument);
    CHECK(SweepGrid{}.snr_values_db().size() == 31);
}

TEST_CASE("every sweep cell equals the direct K evaluation")
{
    const auto ens = small_ensemble(Condition::nlos);
    const AntennaSetup ant;
    const auto r = beam_sweep(ens, ant, small_grid());
    REQUIRE(r.alphas.size() == 7);
    REQUIRE(r.betas.size() == 7);
    CHECK(r.k_at(180.0, 0.0) == 0.0);
    CHECK(r.omni_power == doctest::Approx(1.0));
    for (double a : r.alphas)
        for (double b : r.betas)
        {
            CHECK(r.k_at(a, b) == doctest::Approx(relative_power_factor(a, b, ens, ant)).epsilon(1e-10));
            CHECK(r.power_at(a, b) ==
                  doctest::Approx(ensemble_mean_power(ens, ant.tx_for_alpha(a), ant.rx_for_beta(b))).epsilon(1e-12));
        }
    CHECK_THROWS_AS(r.k_at(181.0, 0.0), std::out_of_range);
}

TEST_CASE("the optimum is the grid maximum")
{
    const auto r = beam_sweep(small_ensemble(Condition::nlos), AntennaSetup{}, small_grid());
    CHECK(r.optimum.k_db == *std::max_element(r.k_db.begin(), r.k_db.end()));
    CHECK(r.optimum.k_db == r.k_at(r.optimum.alpha_deg, r.optimum.beta_deg));
    CHECK(r.k_a_optimal() >= r.k_a_straight());
}

TEST_CASE("LOS sweep peaks at alignment")
{
    const auto r = beam_sweep(small_ensemble(Condition::los), AntennaSetup{}, small_grid());
    CHECK(r.optimum.alpha_deg == 180.0);
    CHECK(r.optimum.beta_deg == 0.0);
    CHECK(r.optimum.k_db == 0.0);
}

TEST_CASE("ties go to the smallest misalignment")
{
    // All paths at the zenith of the RX: every beta sees the same gain.
    PathEnsemble ens;
    ens.trials = 1;
    ens.trial_offsets = {0, 1};
    PathRealization p;
    p.aod = {180.0, 0.0};
    p.aoa = {0.0, 90.0};
    p.power_weight = 1.0;
    ens.paths = {p};
    const auto r = beam_sweep(ens, AntennaSetup{}, small_grid());
    CHECK(r.optimum.alpha_deg == 180.0);
    CHECK(r.optimum.beta_deg == 0.0);
}

TEST_CASE("efficiency curves")
{
    const auto r = beam_sweep(small_ensemble(Condition::nlos), AntennaSetup{}, small_grid());
    const auto c = efficiency_curves(r, {0.0, 10.0, 20.0, 30.0});
    REQUIRE(c.x.size() == 4);
    const double k_e = environment_factor(r.scenario).k_e;
    for (std::size_t i = 0; i < c.x.size(); ++i)
    {
        CHECK(c.optimal[i] >= c.straight[i]);
        CHECK(c.straight[i] ==
              doctest::Approx(std::log2(1.0 + r.k_a_straight() * k_e * db_to_linear(c.x[i]))).epsilon(1e-14));
        if (i)
            CHECK(c.straight[i] > c.straight[i - 1]);
    }
}

TEST_CASE("distance comparison")
{
    LinkScenario sc;
    sc.condition = Condition::nlos;
    const auto dc = distance_comparison(sc, scaled_tdl(TdlModel::B, 266e-9), {3, 6, 2}, small_grid(), AntennaSetup{});
    REQUIRE(dc.curves.x == std::vector<double>{50.0, 100.0});
    REQUIRE(dc.sweeps.size() == 2);
    CHECK(dc.sweeps[0].scenario.distance_m == 50.0);
    CHECK(dc.straight_ratio(50.0, 100.0) == doctest::Approx(dc.curves.straight[0] / dc.curves.straight[1]));
    CHECK(dc.curves.optimal[0] > dc.curves.optimal[1]);
}
