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

#include "mmlink/sweep.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace mmlink;

namespace {

LinkScenario nlos_scenario()
{
    LinkScenario sc;
    sc.condition = Condition::nlos;
    return sc;
}

void BM_ArrayGain(benchmark::State &state)
{
    const auto p = RadiationPattern::array(ArrayGeometry::gnb_default(), ElementParams::gnb_default(), {20.0, 0.0},
                                           28e9);
    double az = -180.0;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(p.gain_dbi(az, 3.0));
        az = az >= 180.0 ? -180.0 : az + 0.37;
    }
}
BENCHMARK(BM_ArrayGain);

void BM_SteeringEvaluator(benchmark::State &state)
{
    std::vector<BeamOrientation> dirs;
    for (int i = 0; i < 1024; ++i)
        dirs.push_back({-180.0 + 0.35 * i, -20.0 + 0.04 * i});
    const SteeringEvaluator ev(ArrayGeometry::gnb_default(), ElementParams::gnb_default(), dirs);
    std::vector<double> out(dirs.size());
    for (auto _ : state)
    {
        ev.linear_gains(15.0, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(dirs.size()));
}
BENCHMARK(BM_SteeringEvaluator);

void BM_GenerateEnsemble(benchmark::State &state)
{
    const auto profile = scaled_tdl(TdlModel::B, 266e-9);
    const auto sc = nlos_scenario();
    const MonteCarloConfig cfg{10, static_cast<int>(state.range(0)), 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(generate_ensemble(profile, sc, cfg).paths.size());
}
BENCHMARK(BM_GenerateEnsemble)->Arg(36)->Arg(360)->Unit(benchmark::kMillisecond);

void BM_BeamSweep(benchmark::State &state)
{
    const auto ens = generate_ensemble(scaled_tdl(TdlModel::B, 266e-9), nlos_scenario(), {10, 36, 1});
    const AntennaSetup ant;
    const double step = static_cast<double>(state.range(0));
    const SweepGrid grid{{90.0, 270.0, step}, {-90.0, 90.0, step}, {100.0}, {}};
    for (auto _ : state)
        benchmark::DoNotOptimize(beam_sweep(ens, ant, grid).optimum);
}
BENCHMARK(BM_BeamSweep)->Arg(10)->Arg(2)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
