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

#ifndef holosec_scenario_io_H
#define holosec_scenario_io_H

#include "holosec/experiments.hpp"

#include <json.hpp>
#include <string>
#include <vector>

namespace holosec
{

// Exit codes shared by the command line tool and the in-process runner.
inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_infeasible = 3;
inline constexpr int exit_validation_failed = 4;

inline constexpr const char *toolkit_version = "holosec 0.1.0";

// JSON round trip for scenario configs. Unknown keys are rejected so typos
// fail loudly; missing keys keep their defaults. Throws std::invalid_argument
// with the offending key in the message.
nlohmann::json config_to_json(const ScenarioConfig &config);
ScenarioConfig config_from_json(const nlohmann::json &j);
ScenarioConfig load_config(const std::string &path);

// Record of one tool invocation, written next to the data it produced.
struct RunManifest
{
    std::string subcommand;
    nlohmann::json config;
    std::uint64_t seed = 0;
    std::vector<std::string> outputs;
    double duration_seconds = 0.0;
    std::string version = toolkit_version;
    unsigned threads = 0;
};

nlohmann::json manifest_to_json(const RunManifest &manifest);

// Writes via a temporary file in the same directory plus an atomic rename,
// so readers never observe a half-written file.
void write_text_atomic(const std::string &path, const std::string &content);

// Stable decimal formatting (shortest round-trippable through %.12g), used
// for every number that lands in a CSV so equal seeds give equal bytes.
std::string format_number(double value);

std::string sweep_csv(const std::string &sweep_name, const std::vector<SweepRow> &rows);
std::string heatmap_csv(const std::vector<HeatCell> &cells);

// Command line entry point (subcommand dispatch, config loading, output
// writing). Returns one of the exit codes above.
int run_cli(int argc, char **argv);

} // namespace holosec

#endif
