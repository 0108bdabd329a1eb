// SPDX-License-Identifier: Apache-2.0
//
// holosec  Secrecy simulation toolkit for holographic MIMO surfaces
// Copyright (C) 2026 The holosec contributors
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

#include "holosec/scenario_io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

using namespace holosec;
namespace fs = std::filesystem;

namespace
{

int run(std::vector<std::string> args)
{
    args.insert(args.begin(), "holosec");
    std::vector<char *> argv;
    for (std::string &arg : args)
        argv.push_back(arg.data());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path &path)
{
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempDir
{
    fs::path path;
    explicit TempDir(const std::string &tag)
    {
        path = fs::temp_directory_path() / ("holosec_" + tag + "_" +
                                            std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("config survives a json round trip")
{
    ScenarioConfig config;
    config.trials = 17;
    config.xi = 0.15;
    config.snr_grid_db = {-5.0, 5.0};
    config.bobs.push_back(NodeConfig{8, 8, 0.125, {10.0, 20.0, 0.0}});
    config.pa_mode = PaMode::fixed;
    config.fixed_fraction = 0.3;
    config.solver.sca_max_iterations = 25;

    ScenarioConfig back = config_from_json(config_to_json(config));
    CHECK(config_to_json(back).dump() == config_to_json(config).dump());
    CHECK(back.trials == 17);
    CHECK(back.bobs.size() == 3);
    CHECK(back.bobs[2].spacing == 0.125);
    CHECK(back.pa_mode == PaMode::fixed);
    CHECK(back.solver.sca_max_iterations == 25);
}

TEST_CASE("missing keys keep their defaults")
{
    ScenarioConfig config = config_from_json(nlohmann::json{{"trials", 9}});
    CHECK(config.trials == 9);
    CHECK(config.alice.n_x == 20);
    CHECK(config.bobs.size() == 2);
    CHECK(config.total_power == 2.0);
}

TEST_CASE("unknown keys are rejected by name")
{
    CHECK_THROWS_WITH(config_from_json(nlohmann::json{{"bogus", 1}}),
                      Catch::Matchers::ContainsSubstring("bogus"));
    CHECK_THROWS_WITH(
        config_from_json(nlohmann::json{{"alice", {{"n_x", 4}, {"rows", 4}}}}),
        Catch::Matchers::ContainsSubstring("rows"));
    CHECK_THROWS_WITH(
        config_from_json(nlohmann::json{{"solver", {{"newton_steps", 3}}}}),
        Catch::Matchers::ContainsSubstring("newton_steps"));
}

TEST_CASE("out-of-range values are rejected on load")
{
    CHECK_THROWS_AS(config_from_json(nlohmann::json{{"xi", 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(config_from_json(nlohmann::json{{"trials", 0}}), std::invalid_argument);
    CHECK_THROWS_AS(config_from_json(nlohmann::json{{"pa_mode", "adaptive"}}),
                    std::invalid_argument);
}

TEST_CASE("numbers are formatted stably")
{
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-10.0) == "-10");
    CHECK(format_number(1e-10) == "1e-10");
    CHECK(format_number(2.0 / 3.0) == "0.666666666667");
}

TEST_CASE("sweep csv has the versioned column layout")
{
    SweepRow row;
    row.param = 20.0;
    row.snr_db = 20.0;
    row.scheme = "proposed";
    row.stats = AggregateStats{18.5, 0.25, 9.25, 0.125, 200};

    const std::string csv = sweep_csv("snr", {row});
    std::istringstream lines(csv);
    std::string header, data;
    std::getline(lines, header);
    std::getline(lines, data);
    CHECK(header == "sweep,param,snr_db,scheme,mean_sum_secrecy,se_sum_secrecy,"
                    "mean_min_secrecy,se_min_secrecy,trials");
    CHECK(data == "snr,20,20,proposed,18.5,0.25,9.25,0.125,200");
}

TEST_CASE("heatmap csv carries cell coordinates")
{
    HeatCell cell;
    cell.x = 42.5;
    cell.y = -10.0;
    cell.scheme = "fixed";
    cell.stats = AggregateStats{7.5, 0.1, 3.75, 0.05, 50};

    const std::string csv = heatmap_csv({cell});
    std::istringstream lines(csv);
    std::string header, data;
    std::getline(lines, header);
    std::getline(lines, data);
    CHECK(header == "x,y,scheme,mean_sum_secrecy,se_sum_secrecy,mean_min_secrecy,"
                    "se_min_secrecy,trials");
    CHECK(data == "42.5,-10,fixed,7.5,0.1,3.75,0.05,50");
}

TEST_CASE("atomic writes land complete and overwrite cleanly")
{
    TempDir dir("atomic");
    const fs::path target = dir.path / "out.txt";
    write_text_atomic(target.string(), "first\n");
    CHECK(slurp(target) == "first\n");
    write_text_atomic(target.string(), "second\n");
    CHECK(slurp(target) == "second\n");
    // no temporary litter
    std::size_t entries = 0;
    for (const auto &entry : fs::directory_iterator(dir.path))
    {
        (void)entry;
        ++entries;
    }
    CHECK(entries == 1);
}

TEST_CASE("bad command lines exit with the config error code")
{
    CHECK(run({}) == exit_config_error);
    CHECK(run({"no-such-command"}) == exit_config_error);
    CHECK(run({"snr-sweep", "--no-such-flag"}) == exit_config_error);
    CHECK(run({"snr-sweep", "--pa", "fixed=1.5"}) == exit_config_error);
    CHECK(run({"snr-sweep", "--xi", "3.0"}) == exit_config_error);
}

TEST_CASE("config file errors exit with the config error code")
{
    TempDir dir("cfg");
    const fs::path bad = dir.path / "bad.json";
    write_text_atomic(bad.string(), "{\"bogus\": 1}\n");
    CHECK(run({"snr-sweep", "--config", bad.string()}) == exit_config_error);
    CHECK(run({"snr-sweep", "--config", (dir.path / "missing.json").string()}) ==
          exit_config_error);
}

TEST_CASE("validate runs the invariant suite")
{
    CHECK(run({"validate"}) == exit_ok);
}

TEST_CASE("snr sweep writes data and manifest, and reruns byte-identical")
{
    TempDir out_a("sweep_a");
    TempDir out_b("sweep_b");

    std::vector<std::string> base{"snr-sweep", "--seed", "11", "--trials", "2",
                                  "--snr",     "0,20",   "--out"};
    std::vector<std::string> first = base;
    first.push_back(out_a.path.string());
    std::vector<std::string> second = base;
    second.push_back(out_b.path.string());

    REQUIRE(run(first) == exit_ok);
    REQUIRE(run(second) == exit_ok);

    const std::string csv_a = slurp(out_a.path / "snr_sweep.csv");
    const std::string csv_b = slurp(out_b.path / "snr_sweep.csv");
    CHECK(csv_a == csv_b);
    CHECK(csv_a.rfind("sweep,param,", 0) == 0);
    // two SNR points, both schemes, plus the header
    CHECK(std::count(csv_a.begin(), csv_a.end(), '\n') == 5);

    const nlohmann::json manifest =
        nlohmann::json::parse(slurp(out_a.path / "snr_sweep_manifest.json"));
    CHECK(manifest.at("subcommand") == "snr-sweep");
    CHECK(manifest.at("seed") == 11);
    CHECK(manifest.at("version") == toolkit_version);
    CHECK(manifest.at("config").at("trials") == 2);
}

TEST_CASE("oracle compare reports the dominance ratio")
{
    TempDir out("oracle");
    REQUIRE(run({"oracle-compare", "--seed", "5", "--trials", "5", "--out",
                 out.path.string()}) == exit_ok);
    const std::string csv = slurp(out.path / "oracle_compare.csv");
    CHECK(csv.rfind("instance,sca_min_secrecy,grid_min_secrecy,ratio", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}
