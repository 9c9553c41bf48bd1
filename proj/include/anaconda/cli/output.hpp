// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "anaconda/scenario/runner.hpp"

namespace anaconda::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kVersion = "0.1.0";

// Columns: trial, round, sim_time_s, f_value, coverage_pct, beta_running.
std::string trials_csv(const std::vector<scenario::TrialResult>& trials);
// Columns: round, trials, mean_sim_time_s, mean_coverage_pct,
// std_coverage_pct.
std::string curve_csv(const scenario::AlgorithmSummary& summary);

nlohmann::ordered_json bound_json(const analysis::BoundReport& report);
nlohmann::ordered_json summary_json(const scenario::ExperimentResult& result);

struct RunManifest {
  std::string config_digest;
  std::uint64_t seed = 0;
  std::string version = kVersion;
  std::string config_source;
  std::vector<std::string> overrides;
  std::vector<std::string> outputs;  // relative to the output directory
  double wall_seconds = 0.0;
};

nlohmann::ordered_json manifest_json(const RunManifest& manifest);

// Writes trials_<point>_<algorithm>.csv, curves_<point>_<algorithm>.csv,
// summary.json and config.canonical into out_dir and records them in the
// manifest (written last, as manifest.json).
void write_outputs(const scenario::ExperimentResult& result,
                   const std::filesystem::path& out_dir,
                   RunManifest& manifest);

}  // namespace anaconda::cli
