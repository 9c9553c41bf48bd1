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

#include "anaconda/scenario/presets.hpp"

#include "anaconda/presets_data.hpp"

namespace anaconda::scenario {

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = [] {
    std::vector<Preset> out;
    for (const auto& [name, text] : generated::kPresetFiles) {
      out.push_back({std::string(name), std::string(text)});
    }
    return out;
  }();
  return all;
}

bool is_preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return true;
  }
  return false;
}

ScenarioConfig load_preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return parse_config(p.text, "preset:" + p.name);
  }
  std::string known;
  for (const auto& p : presets()) known += (known.empty() ? "" : ", ") + p.name;
  throw ConfigError("unknown preset '" + std::string(name) + "' (known: " +
                    known + ")");
}

}  // namespace anaconda::scenario
