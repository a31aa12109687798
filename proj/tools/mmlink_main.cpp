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
#include "mmlink/experiment.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidConfig = 1;
constexpr int kExitRuntime = 2;

// MMLINK_OUTPUT_DIR takes precedence over [output] directory.
std::filesystem::path output_dir(const mmlink::ExperimentConfig &cfg)
{
    if (const char *env = std::getenv("MMLINK_OUTPUT_DIR"); env && *env)
        return env;
    return cfg.output_directory;
}

int cmd_run(const std::string &path, bool quiet)
{
    mmlink::ExperimentConfig cfg;
    try
    {
        cfg = mmlink::load_config(path);
    }
    catch (const mmlink::ConfigError &e)
    {
        std::cerr << "mmlink: invalid config: " << e.what() << '\n';
        return kExitInvalidConfig;
    }

    try
    {
        const auto dir = output_dir(cfg);
        const auto res = mmlink::run_experiment(cfg, dir, quiet ? nullptr : &std::cerr);
        for (const auto &s : res.conditions)
            std::cout << mmlink::to_string(s.condition) << ": optimum alpha=" << s.optimum.alpha_deg
                      << " beta=" << s.optimum.beta_deg << " K*=" << s.optimum.k_db << " dB\n";
        std::cout << "wrote " << res.files.size() << " files to " << dir.string() << '\n';
        return kExitOk;
    }
    catch (const std::exception &e)
    {
        std::cerr << "mmlink: run failed: " << e.what() << '\n';
        return kExitRuntime;
    }
}

int cmd_validate(const std::string &path)
{
    try
    {
        mmlink::load_config(path);
    }
    catch (const mmlink::ConfigError &e)
    {
        std::cerr << "mmlink: invalid config: " << e.what() << '\n';
        return kExitInvalidConfig;
    }
    catch (const std::exception &e)
    {
        std::cerr << "mmlink: " << e.what() << '\n';
        return kExitRuntime;
    }
    std::cout << path << ": ok\n";
    return kExitOk;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"mmlink: mmWave link spectral-efficiency simulator"};
    app.set_version_flag("--version", "mmlink " + std::string(mmlink::library_version()));
    app.require_subcommand(1);

    std::string config_path;
    bool quiet = false;

    auto *run = app.add_subcommand("run", "Run the experiment described by a config file");
    run->add_option("config", config_path, "Config file")->required();
    run->add_flag("-q,--quiet", quiet, "No progress output");

    auto *validate = app.add_subcommand("validate", "Check a config file without running it");
    validate->add_option("config", config_path, "Config file")->required();

    app.add_subcommand("defaults", "Print the default config");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidConfig;
    }

    if (*run)
        return cmd_run(config_path, quiet);
    if (*validate)
        return cmd_validate(config_path);

    mmlink::serialize_config(std::cout, mmlink::ExperimentConfig::defaults());
    return kExitOk;
}
