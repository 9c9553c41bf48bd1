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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anaconda/errors.hpp"
#include "anaconda/objective/coverage_world.hpp"
#include "anaconda/timing/delay_model.hpp"

namespace anaconda::scenario {

// Malformed or inconsistent scenario configuration. The message names the
// source, line and field when known.
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

enum class Placement { kExplicit, kUniform };

enum class AlgorithmKind { kAnaconda, kNearest, kRandom, kDfsSg, kDfsBsg };

// "anaconda", "nearest", "random" optionally suffixed "-<K>n" to override
// the bandwidth (e.g. "random-1n"); "dfs-sg"; "dfs-bsg".
struct AlgorithmSpec {
  AlgorithmKind kind = AlgorithmKind::kAnaconda;
  std::optional<int> alpha;
  std::string token;

  bool sequential() const {
    return kind == AlgorithmKind::kDfsSg || kind == AlgorithmKind::kDfsBsg;
  }
};

AlgorithmSpec parse_algorithm(const std::string& token);

// Per-camera deviations from the shared camera parameters.
struct CameraOverride {
  int index = 0;
  std::optional<double> fov_radius;
  std::optional<double> aov;
  std::optional<int> directions;
  std::optional<double> comm_range;
  std::optional<int> alpha;
};

// An agent joins or leaves before the given round is played.
struct Event {
  int round = 1;
  bool join = false;
  int agent = 0;
};

struct SweepSpec {
  bool zip = false;  // zip lists pointwise instead of taking the product
  std::vector<std::string> keys;
  // values[k] lists the YAML-encoded settings of keys[k].
  std::vector<std::vector<std::string>> values;

  bool empty() const { return keys.empty(); }
};

struct ScenarioConfig {
  std::string name = "scenario";
  std::string description;

  // World. No regions: the whole map is of interest.
  double width = 50.0;
  double height = 50.0;
  double cell_size = 1.0;
  std::vector<objective::Rect> regions;

  // Cameras.
  int camera_count = 0;
  Placement placement = Placement::kUniform;
  std::vector<objective::Point> positions;
  double fov_radius = 8.0;
  double aov = 1.0471975511965976;  // pi / 3
  int directions = 16;
  double comm_range = 16.0;
  int alpha = 1;
  std::vector<CameraOverride> overrides;

  // Run.
  std::vector<std::string> algorithms{"anaconda"};
  std::optional<int> rounds = 100;
  std::optional<double> budget_seconds;
  int trials = 1;
  std::uint64_t seed = 1;
  bool bounds = true;  // report bounds where brute force is feasible
  bool sg_count_computation = true;
  int bsg_extra_evals = 2;

  timing::DelayModel delays;
  SweepSpec sweep;
  std::vector<Event> events;

  std::vector<AlgorithmSpec> algorithm_specs() const;
  bool needs_connectivity() const;
  // Camera i's effective parameters.
  objective::CameraSpec camera(int index, objective::Point position) const;
  int camera_alpha(int index) const;
};

// Sets one field from its dotted key ("run.trials") and a YAML-encoded
// value ("20", "[1, 2]"). Bare keys are accepted when unambiguous
// ("trials"). Throws ConfigError.
void apply_setting(ScenarioConfig& config, const std::string& key,
                   const std::string& yaml_value);

// "key=value" strings, as given on the command line.
void apply_overrides(ScenarioConfig& config,
                     const std::vector<std::string>& overrides);

// Parses the sectioned config text; `source` labels diagnostics.
ScenarioConfig parse_config(const std::string& text,
                            const std::string& source = "<config>");
// Reads the output of canonical_text back.
ScenarioConfig parse_canonical(const std::string& text,
                               const std::string& source = "<canonical>");
// Either format; canonical files start with "name = ".
ScenarioConfig load_config(const std::string& path);

// Throws ConfigError on any inconsistency a run would trip over.
void validate(const ScenarioConfig& config);

// Deterministic text form of every field; equal configs give equal text.
std::string canonical_text(const ScenarioConfig& config);
// FNV-1a 64 of the canonical text, as 16 hex digits.
std::string config_digest(const ScenarioConfig& config);

struct SweepPoint {
  int index = 0;
  std::string label;  // "p<index>"
  std::vector<std::pair<std::string, std::string>> settings;
  ScenarioConfig config;  // sweep applied and cleared
};

// One point for an empty sweep; otherwise the product (or zip) of lists.
std::vector<SweepPoint> expand_sweep(const ScenarioConfig& config);

// Every dotted key apply_setting understands.
const std::vector<std::string>& known_keys();

}  // namespace anaconda::scenario
