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

#include "mmlink/csv.hpp"
#include "mmlink/experiment.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace mmlink;
namespace fs = std::filesystem;

namespace {

ExperimentConfig tiny()
{
    ExperimentConfig cfg;
    cfg.monte_carlo = {3, 6, 5};
    cfg.grid = {{160.0, 200.0, 10.0}, {-20.0, 20.0, 10.0}, {50.0, 100.0}, {0.0, 10.0, 20.0}};
    return cfg;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir
{
    fs::path path;
    explicit TempDir(const std::string &name) : path(fs::temp_directory_path() / name) { fs::remove_all(path); }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("experiment writes every artifact")
{
    TempDir dir("mmlink_test_experiment");
    const auto res = run_experiment(tiny(), dir.path);
    std::set<std::string> names;
    for (const auto &f : res.files)
    {
        CHECK(fs::exists(f));
        names.insert(f.filename().string());
    }
    for (const char *n : {"k_grid_los.csv", "k_grid_nlos.csv", "k_grid_los.svg", "k_grid_nlos.svg", "se_vs_snr.csv",
                          "se_vs_snr.svg", "se_vs_distance.csv", "se_vs_distance.svg", "pattern_gnb_steer_0.csv",
                          "pattern_gnb_steer_30.csv", "pattern_ue.csv", "summary.csv", "manifest.txt"})
        CHECK_MESSAGE(names.count(n) == 1, n);
    CHECK(names.count("paths_los.csv") == 0);
    REQUIRE(res.conditions.size() == 2);
    CHECK(res.conditions[0].condition == Condition::los);
    CHECK(res.se_vs_distance.curves.x == std::vector<double>{50.0, 100.0});
}

TEST_CASE("k grid csv round trips exactly")
{
    TempDir dir("mmlink_test_roundtrip");
    const auto res = run_experiment(tiny(), dir.path);
    const auto &sweep = res.sweeps.at(Condition::nlos);
    std::ifstream in(dir.path / "k_grid_nlos.csv");
    const CsvTable t = read_numeric_csv(in);
    CHECK(t.header == std::vector<std::string>{"alpha_deg", "beta_deg", "k_db"});
    REQUIRE(t.rows.size() == sweep.k_db.size());
    for (std::size_t k = 0; k < t.rows.size(); ++k)
    {
        CHECK(t.rows[k][0] == sweep.alphas[k / sweep.betas.size()]);
        CHECK(t.rows[k][1] == sweep.betas[k % sweep.betas.size()]);
        CHECK(t.rows[k][2] == sweep.k_db[k]);
    }
}

TEST_CASE("outputs are reproducible and the manifest re-runs")
{
    TempDir a("mmlink_test_det_a"), b("mmlink_test_det_b"), c("mmlink_test_det_c");
    auto cfg = tiny();
    cfg.dump_paths = true;
    const auto ra = run_experiment(cfg, a.path);
    run_experiment(cfg, b.path);
    for (const auto &f : ra.files)
        if (f.filename() != "manifest.txt")
            CHECK_MESSAGE(slurp(f) == slurp(b.path / f.filename()), f.filename().string());

    const std::string manifest = slurp(a.path / "manifest.txt");
    CHECK(manifest.find("# seed = 5") != std::string::npos);
    std::istringstream is(manifest);
    const auto again = parse_config(is);
    std::ostringstream s1, s2;
    serialize_config(s1, cfg);
    serialize_config(s2, again);
    CHECK(s1.str() == s2.str());

    run_experiment(again, c.path);
    CHECK(slurp(a.path / "k_grid_los.csv") == slurp(c.path / "k_grid_los.csv"));
}

TEST_CASE("curve csv format")
{
    std::ostringstream os;
    write_curves_csv(os, {{0.0, 1.0}, {2.0, 3.0}, {4.0, 5.0}});
    CHECK(os.str() == "x,y_straight,y_optimal\n0,2,4\n1,3,5\n");
    CHECK_FALSE(library_version().empty());
}
