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

#include "anaconda/scenario/instance.hpp"

#include <numbers>
#include <utility>

#include "anaconda/bandit/rng.hpp"
#include "anaconda/benchmarks/comm_graph.hpp"
#include "anaconda/errors.hpp"

namespace anaconda::scenario {

std::vector<std::vector<int>> build_coordination_neighborhoods(
    std::span<const objective::Point> positions,
    std::span<const double> comm_ranges) {
  if (positions.size() != comm_ranges.size()) {
    throw InvalidArgument("one communication range per position required");
  }
  const int n = static_cast<int>(positions.size());
  std::vector<std::vector<int>> m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i && objective::distance(positions[i], positions[j]) <=
                        comm_ranges[i] + 1e-9) {
        m[i].push_back(j);
      }
    }
  }
  return m;
}

ScenarioConfig build_urban_preset() {
  ScenarioConfig c;
  c.name = "urban";
  c.description =
      "Eight cameras monitor four 20x40 street blocks on a 110x40 map, "
      "with one neighbor each.";
  c.width = 110.0;
  c.height = 40.0;
  c.cell_size = 1.0;
  c.regions = {{0, 0, 20, 40}, {30, 0, 50, 40}, {60, 0, 80, 40},
               {90, 0, 110, 40}};
  c.camera_count = 8;
  c.placement = Placement::kExplicit;
  c.positions = {{0, 20},  {20, 20}, {30, 20}, {50, 20},
                 {60, 20}, {80, 20}, {90, 20}, {110, 20}};
  c.fov_radius = 20.0;
  c.aov = std::numbers::pi / 2.0;
  c.directions = 16;
  c.comm_range = 1000.0;
  c.alpha = 1;
  c.algorithms = {"anaconda-1n", "random-1n", "nearest-1n"};
  c.rounds = 3000;
  c.budget_seconds.reset();
  c.trials = 20;
  c.seed = 1;
  c.bounds = true;
  return c;
}

objective::CoverageWorld build_urban_world() {
  const ScenarioConfig c = build_urban_preset();
  std::vector<objective::CameraSpec> cams;
  for (int i = 0; i < static_cast<int>(c.positions.size()); ++i) {
    cams.push_back(c.camera(i, c.positions[i]));
  }
  return objective::CoverageWorld::with_regions(c.width, c.height, c.regions,
                                                std::move(cams), c.cell_size);
}

namespace {

std::vector<objective::Point> sample_uniform(const ScenarioConfig& c,
                                             int trial, int attempt) {
  auto rng = bandit::Rng::derive(
      c.seed,
      {static_cast<std::uint64_t>(trial),
       static_cast<std::uint64_t>(bandit::StreamRole::kPlacement),
       static_cast<std::uint64_t>(attempt)});
  std::vector<objective::Point> out;
  out.reserve(c.camera_count);
  for (int i = 0; i < c.camera_count; ++i) {
    const double x = rng.uniform01() * c.width;
    const double y = rng.uniform01() * c.height;
    out.push_back({x, y});
  }
  return out;
}

}  // namespace

Instance build_instance(const ScenarioConfig& c, int trial) {
  const bool need_connected = c.needs_connectivity();
  std::vector<objective::Point> positions;
  std::vector<std::vector<int>> neighborhoods;
  long rejections = 0;
  const int n = c.placement == Placement::kExplicit
                    ? static_cast<int>(c.positions.size())
                    : c.camera_count;
  std::vector<double> ranges(n);
  for (int i = 0; i < n; ++i) ranges[i] = c.camera(i, {}).comm_range;

  for (int attempt = 0;; ++attempt) {
    positions = c.placement == Placement::kExplicit
                    ? c.positions
                    : sample_uniform(c, trial, attempt);
    neighborhoods = build_coordination_neighborhoods(positions, ranges);
    if (!need_connected || c.placement == Placement::kExplicit) break;
    if (bench::CommGraph::from_neighborhoods(neighborhoods)
            .strongly_connected()) {
      break;
    }
    ++rejections;
    if (attempt + 1 >= kMaxPlacementAttempts) {
      throw ConnectivityError(
          "no strongly connected placement found in " +
          std::to_string(kMaxPlacementAttempts) +
          " uniform samples; increase cameras.comm_range_units");
    }
  }

  std::vector<objective::CameraSpec> cams;
  cams.reserve(n);
  for (int i = 0; i < n; ++i) cams.push_back(c.camera(i, positions[i]));
  objective::CoverageWorld world =
      c.regions.empty()
          ? objective::CoverageWorld::open_map(c.width, c.height,
                                               std::move(cams), c.cell_size)
          : objective::CoverageWorld::with_regions(
                c.width, c.height, c.regions, std::move(cams), c.cell_size);
  objective::CoverageOracle oracle = objective::CoverageOracle::from_world(world);
  std::vector<int> bandwidths(n);
  for (int i = 0; i < n; ++i) bandwidths[i] = c.camera_alpha(i);
  return Instance{std::move(world), std::move(oracle),
                  std::move(neighborhoods), std::move(bandwidths), rejections};
}

}  // namespace anaconda::scenario
