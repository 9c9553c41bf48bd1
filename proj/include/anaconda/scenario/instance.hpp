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

#include <span>
#include <vector>

#include "anaconda/objective/coverage_world.hpp"
#include "anaconda/objective/oracle.hpp"
#include "anaconda/scenario/config.hpp"

namespace anaconda::scenario {

// M_i = { j != i : |x_j - x_i| <= c_i }. Not symmetric when ranges differ.
std::vector<std::vector<int>> build_coordination_neighborhoods(
    std::span<const objective::Point> positions,
    std::span<const double> comm_ranges);

// The eight-camera street-block scenario: 110 x 40 map, four 20 x 40
// blocks, cameras on the midline, r = 20, 90 degree view, 16 headings,
// everyone in range of everyone, one neighbor each, 3000 rounds, 20 trials,
// ANACONDA against random and nearest neighbor selection.
ScenarioConfig build_urban_preset();

// World of the urban preset.
objective::CoverageWorld build_urban_world();

// Everything one trial runs on.
struct Instance {
  objective::CoverageWorld world;
  objective::CoverageOracle oracle;
  std::vector<std::vector<int>> neighborhoods;  // M_i
  std::vector<int> bandwidths;                  // alpha_i
  long placement_rejections = 0;

  int agent_count() const { return oracle.agent_count(); }
};

inline constexpr int kMaxPlacementAttempts = 10'000;

// Camera positions for a trial: the explicit list, or a uniform sample over
// the map. When the run contains a sequential benchmark, samples whose
// communication graph is not strongly connected are redrawn (and counted);
// after kMaxPlacementAttempts a ConnectivityError is raised. Explicit
// layouts are never redrawn; the benchmark itself reports disconnection.
Instance build_instance(const ScenarioConfig& config, int trial);

}  // namespace anaconda::scenario
