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

#include <string>
#include <string_view>
#include <vector>

#include "anaconda/scenario/config.hpp"

namespace anaconda::scenario {

struct Preset {
  std::string name;
  std::string text;  // the shipped YAML
};

// The shipped scenarios, in a fixed order.
const std::vector<Preset>& presets();

// Parses the named preset; ConfigError for an unknown name.
ScenarioConfig load_preset(std::string_view name);

bool is_preset(std::string_view name);

}  // namespace anaconda::scenario
