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

#include "anaconda/scenario/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <regex>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace anaconda::scenario {
namespace {

using Setter = std::function<void(ScenarioConfig&, const YAML::Node&)>;

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

double as_double(const YAML::Node& node) {
  if (!node.IsScalar()) fail("expected a number");
  try {
    return node.as<double>();
  } catch (const YAML::Exception&) {
    fail("expected a number, got '" + node.Scalar() + "'");
  }
}

double as_nonnegative(const YAML::Node& node) {
  const double v = as_double(node);
  if (!(v >= 0.0) || !std::isfinite(v)) fail("must be finite and >= 0");
  return v;
}

double as_positive(const YAML::Node& node) {
  const double v = as_double(node);
  if (!(v > 0.0) || !std::isfinite(v)) fail("must be finite and > 0");
  return v;
}

long long as_integer(const YAML::Node& node) {
  if (!node.IsScalar()) fail("expected an integer");
  try {
    return node.as<long long>();
  } catch (const YAML::Exception&) {
    fail("expected an integer, got '" + node.Scalar() + "'");
  }
}

int as_int_at_least(const YAML::Node& node, int lowest) {
  const long long v = as_integer(node);
  if (v < lowest || v > 1'000'000'000) {
    fail("must be an integer >= " + std::to_string(lowest));
  }
  return static_cast<int>(v);
}

bool as_bool(const YAML::Node& node) {
  if (!node.IsScalar()) fail("expected true or false");
  try {
    return node.as<bool>();
  } catch (const YAML::Exception&) {
    fail("expected true or false, got '" + node.Scalar() + "'");
  }
}

std::string as_string(const YAML::Node& node) {
  if (!node.IsScalar()) fail("expected a string");
  return node.Scalar();
}

std::vector<double> as_numbers(const YAML::Node& node, std::size_t arity) {
  if (!node.IsSequence() || node.size() != arity) {
    fail("expected a list of " + std::to_string(arity) + " numbers");
  }
  std::vector<double> out;
  for (const auto& item : node) out.push_back(as_double(item));
  return out;
}

std::vector<objective::Point> as_points(const YAML::Node& node) {
  if (!node.IsSequence()) fail("expected a list of [x, y] pairs");
  std::vector<objective::Point> out;
  for (const auto& item : node) {
    const auto xy = as_numbers(item, 2);
    out.push_back({xy[0], xy[1]});
  }
  return out;
}

std::vector<objective::Rect> as_rects(const YAML::Node& node) {
  if (!node.IsSequence()) fail("expected a list of [x0, y0, x1, y1] boxes");
  std::vector<objective::Rect> out;
  for (const auto& item : node) {
    const auto r = as_numbers(item, 4);
    if (r[0] > r[2] || r[1] > r[3]) fail("region needs x0 <= x1, y0 <= y1");
    out.push_back({r[0], r[1], r[2], r[3]});
  }
  return out;
}

std::vector<CameraOverride> as_overrides(const YAML::Node& node) {
  if (!node.IsSequence()) fail("expected a list of camera overrides");
  std::vector<CameraOverride> out;
  for (const auto& item : node) {
    if (!item.IsMap()) fail("camera override must be a map");
    CameraOverride o;
    bool has_index = false;
    for (const auto& kv : item) {
      const std::string key = kv.first.Scalar();
      if (key == "index") {
        o.index = as_int_at_least(kv.second, 0);
        has_index = true;
      } else if (key == "fov_radius_units") {
        o.fov_radius = as_positive(kv.second);
      } else if (key == "aov_radians") {
        o.aov = as_positive(kv.second);
      } else if (key == "aov_degrees") {
        o.aov = as_positive(kv.second) * std::numbers::pi / 180.0;
      } else if (key == "directions") {
        o.directions = as_int_at_least(kv.second, 1);
      } else if (key == "comm_range_units") {
        o.comm_range = as_nonnegative(kv.second);
      } else if (key == "alpha") {
        o.alpha = as_int_at_least(kv.second, 0);
      } else {
        fail("unknown camera override field '" + key + "'");
      }
    }
    if (!has_index) fail("camera override needs an index");
    out.push_back(o);
  }
  return out;
}

std::vector<Event> as_events(const YAML::Node& node) {
  if (!node.IsSequence()) fail("expected a list of events");
  std::vector<Event> out;
  for (const auto& item : node) {
    if (!item.IsMap()) fail("event must be a map");
    Event e;
    int kinds = 0;
    bool has_round = false;
    for (const auto& kv : item) {
      const std::string key = kv.first.Scalar();
      if (key == "round") {
        e.round = as_int_at_least(kv.second, 1);
        has_round = true;
      } else if (key == "join" || key == "leave") {
        e.join = key == "join";
        e.agent = as_int_at_least(kv.second, 0);
        ++kinds;
      } else {
        fail("unknown event field '" + key + "'");
      }
    }
    if (!has_round || kinds != 1) {
      fail("event needs a round and exactly one of join/leave");
    }
    out.push_back(e);
  }
  return out;
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"name", [](ScenarioConfig& c, const YAML::Node& n) {
         c.name = as_string(n);
       }},
      {"description", [](ScenarioConfig& c, const YAML::Node& n) {
         c.description = as_string(n);
       }},
      {"world.width_units", [](ScenarioConfig& c, const YAML::Node& n) {
         c.width = as_positive(n);
       }},
      {"world.height_units", [](ScenarioConfig& c, const YAML::Node& n) {
         c.height = as_positive(n);
       }},
      {"world.area_units2", [](ScenarioConfig& c, const YAML::Node& n) {
         // Square map of the given area.
         c.width = c.height = std::sqrt(as_positive(n));
       }},
      {"world.cell_size_units", [](ScenarioConfig& c, const YAML::Node& n) {
         c.cell_size = as_positive(n);
       }},
      {"world.regions", [](ScenarioConfig& c, const YAML::Node& n) {
         c.regions = as_rects(n);
       }},
      {"cameras.count", [](ScenarioConfig& c, const YAML::Node& n) {
         c.camera_count = as_int_at_least(n, 1);
       }},
      {"cameras.placement", [](ScenarioConfig& c, const YAML::Node& n) {
         const std::string p = as_string(n);
         if (p == "explicit") {
           c.placement = Placement::kExplicit;
         } else if (p == "uniform") {
           c.placement = Placement::kUniform;
         } else {
           fail("placement must be 'explicit' or 'uniform'");
         }
       }},
      {"cameras.positions", [](ScenarioConfig& c, const YAML::Node& n) {
         c.positions = as_points(n);
       }},
      {"cameras.fov_radius_units", [](ScenarioConfig& c, const YAML::Node& n) {
         c.fov_radius = as_positive(n);
       }},
      {"cameras.aov_radians", [](ScenarioConfig& c, const YAML::Node& n) {
         c.aov = as_positive(n);
       }},
      {"cameras.aov_degrees", [](ScenarioConfig& c, const YAML::Node& n) {
         c.aov = as_positive(n) * std::numbers::pi / 180.0;
       }},
      {"cameras.directions", [](ScenarioConfig& c, const YAML::Node& n) {
         c.directions = as_int_at_least(n, 1);
       }},
      {"cameras.comm_range_units", [](ScenarioConfig& c, const YAML::Node& n) {
         c.comm_range = as_nonnegative(n);
       }},
      {"cameras.alpha", [](ScenarioConfig& c, const YAML::Node& n) {
         c.alpha = as_int_at_least(n, 0);
       }},
      {"cameras.overrides", [](ScenarioConfig& c, const YAML::Node& n) {
         c.overrides = as_overrides(n);
       }},
      {"run.algorithms", [](ScenarioConfig& c, const YAML::Node& n) {
         std::vector<std::string> algos;
         if (n.IsScalar()) {
           algos.push_back(n.Scalar());
         } else if (n.IsSequence()) {
           for (const auto& item : n) algos.push_back(as_string(item));
         } else {
           fail("expected an algorithm or a list of them");
         }
         for (const auto& a : algos) parse_algorithm(a);
         c.algorithms = std::move(algos);
       }},
      {"run.rounds", [](ScenarioConfig& c, const YAML::Node& n) {
         c.rounds = as_int_at_least(n, 1);
         c.budget_seconds.reset();
       }},
      {"run.budget_seconds", [](ScenarioConfig& c, const YAML::Node& n) {
         c.budget_seconds = as_positive(n);
         c.rounds.reset();
       }},
      {"run.trials", [](ScenarioConfig& c, const YAML::Node& n) {
         c.trials = as_int_at_least(n, 1);
       }},
      {"run.seed", [](ScenarioConfig& c, const YAML::Node& n) {
         const long long s = as_integer(n);
         if (s < 0) fail("seed must be >= 0");
         c.seed = static_cast<std::uint64_t>(s);
       }},
      {"run.bounds", [](ScenarioConfig& c, const YAML::Node& n) {
         c.bounds = as_bool(n);
       }},
      {"run.sg_count_computation", [](ScenarioConfig& c, const YAML::Node& n) {
         c.sg_count_computation = as_bool(n);
       }},
      {"run.bsg_extra_evals", [](ScenarioConfig& c, const YAML::Node& n) {
         c.bsg_extra_evals = as_int_at_least(n, 0);
       }},
      {"delays.tau_f_seconds", [](ScenarioConfig& c, const YAML::Node& n) {
         c.delays.tau_f = as_nonnegative(n);
       }},
      {"delays.tau_c_seconds", [](ScenarioConfig& c, const YAML::Node& n) {
         c.delays.tau_c = as_nonnegative(n);
       }},
      {"events", [](ScenarioConfig& c, const YAML::Node& n) {
         c.events = as_events(n);
       }},
  };
  return table;
}

std::string resolve_key(const std::string& key) {
  const auto& table = setters();
  if (table.count(key)) return key;
  std::string match;
  for (const auto& [full, _] : table) {
    const auto dot = full.rfind('.');
    if (dot != std::string::npos && full.substr(dot + 1) == key) {
      if (!match.empty()) fail("ambiguous key '" + key + "'");
      match = full;
    }
  }
  if (match.empty()) fail("unknown key '" + key + "'");
  return match;
}

void apply_node(ScenarioConfig& config, const std::string& key,
                const YAML::Node& value) {
  const std::string full = resolve_key(key);
  try {
    setters().at(full)(config, value);
  } catch (const ConfigError& e) {
    throw ConfigError(full + ": " + e.what());
  }
}

std::string flow(const YAML::Node& node) {
  YAML::Emitter out;
  out.SetSeqFormat(YAML::Flow);
  out.SetMapFormat(YAML::Flow);
  out << node;
  return out.c_str();
}

std::string where(const std::string& source, const YAML::Mark& mark) {
  if (mark.is_null()) return source;
  return fmt::format("{}:{}:{}", source, mark.line + 1, mark.column + 1);
}

std::string num(double v) { return fmt::format("{}", v); }

}  // namespace

AlgorithmSpec parse_algorithm(const std::string& token) {
  AlgorithmSpec spec;
  spec.token = token;
  if (token == "dfs-sg") {
    spec.kind = AlgorithmKind::kDfsSg;
    return spec;
  }
  if (token == "dfs-bsg") {
    spec.kind = AlgorithmKind::kDfsBsg;
    return spec;
  }
  static const std::regex pattern("(anaconda|nearest|random)(?:-([0-9]+)n)?");
  std::smatch m;
  if (!std::regex_match(token, m, pattern)) {
    throw ConfigError("unknown algorithm '" + token +
                      "' (expected anaconda[-Kn], nearest[-Kn], "
                      "random[-Kn], dfs-sg or dfs-bsg)");
  }
  const std::string base = m[1];
  spec.kind = base == "anaconda" ? AlgorithmKind::kAnaconda
              : base == "nearest" ? AlgorithmKind::kNearest
                                  : AlgorithmKind::kRandom;
  if (m[2].matched) spec.alpha = std::stoi(m[2]);
  return spec;
}

std::vector<AlgorithmSpec> ScenarioConfig::algorithm_specs() const {
  std::vector<AlgorithmSpec> specs;
  for (const auto& a : algorithms) specs.push_back(parse_algorithm(a));
  return specs;
}

bool ScenarioConfig::needs_connectivity() const {
  for (const auto& spec : algorithm_specs()) {
    if (spec.sequential()) return true;
  }
  return false;
}

objective::CameraSpec ScenarioConfig::camera(int index,
                                             objective::Point position) const {
  objective::CameraSpec cam;
  cam.position = position;
  cam.fov_radius = fov_radius;
  cam.aov = aov;
  int dirs = directions;
  cam.comm_range = comm_range;
  for (const auto& o : overrides) {
    if (o.index != index) continue;
    if (o.fov_radius) cam.fov_radius = *o.fov_radius;
    if (o.aov) cam.aov = *o.aov;
    if (o.directions) dirs = *o.directions;
    if (o.comm_range) cam.comm_range = *o.comm_range;
  }
  cam.directions = objective::evenly_spaced_directions(dirs);
  return cam;
}

int ScenarioConfig::camera_alpha(int index) const {
  int a = alpha;
  for (const auto& o : overrides) {
    if (o.index == index && o.alpha) a = *o.alpha;
  }
  return a;
}

void apply_setting(ScenarioConfig& config, const std::string& key,
                   const std::string& yaml_value) {
  YAML::Node node;
  try {
    node = YAML::Load(yaml_value);
  } catch (const YAML::Exception& e) {
    throw ConfigError(key + ": cannot parse value '" + yaml_value +
                      "': " + e.msg);
  }
  apply_node(config, key, node);
}

void apply_overrides(ScenarioConfig& config,
                     const std::vector<std::string>& overrides) {
  for (const auto& item : overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ConfigError("override '" + item + "' is not key=value");
    }
    apply_setting(config, item.substr(0, eq), item.substr(eq + 1));
  }
}

ScenarioConfig parse_config(const std::string& text,
                            const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(where(source, e.mark) + ": " + e.msg);
  }
  if (!root.IsMap()) throw ConfigError(source + ": top level must be a map");

  ScenarioConfig config;
  bool saw_rounds = false;
  bool saw_budget = false;
  auto apply_at = [&](const std::string& key, const YAML::Node& value) {
    try {
      apply_node(config, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(where(source, value.Mark()) + ": " + e.what());
    }
  };
  static const std::set<std::string> sections = {"world", "cameras", "run",
                                                 "delays"};
  for (const auto& top : root) {
    const std::string section = top.first.Scalar();
    const YAML::Node& body = top.second;
    if (section == "name" || section == "description" || section == "events") {
      apply_at(section, body);
    } else if (sections.count(section)) {
      if (!body.IsMap()) {
        throw ConfigError(where(source, body.Mark()) + ": section '" +
                          section + "' must be a map");
      }
      for (const auto& kv : body) {
        const std::string key = section + "." + kv.first.Scalar();
        if (!setters().count(key)) {
          throw ConfigError(where(source, kv.first.Mark()) +
                            ": unknown field '" + key + "'");
        }
        saw_rounds |= key == "run.rounds";
        saw_budget |= key == "run.budget_seconds";
        apply_at(key, kv.second);
      }
    } else if (section == "sweep") {
      if (!body.IsMap()) {
        throw ConfigError(where(source, body.Mark()) +
                          ": section 'sweep' must be a map");
      }
      for (const auto& kv : body) {
        const std::string key = kv.first.Scalar();
        if (key == "mode") {
          const std::string mode = kv.second.Scalar();
          if (mode != "grid" && mode != "zip") {
            throw ConfigError(where(source, kv.second.Mark()) +
                              ": sweep.mode must be 'grid' or 'zip'");
          }
          config.sweep.zip = mode == "zip";
          continue;
        }
        if (!setters().count(key) || key == "events") {
          throw ConfigError(where(source, kv.first.Mark()) +
                            ": cannot sweep unknown field '" + key + "'");
        }
        if (!kv.second.IsSequence() || kv.second.size() == 0) {
          throw ConfigError(where(source, kv.second.Mark()) + ": sweep." +
                            key + " must be a nonempty list");
        }
        std::vector<std::string> values;
        for (const auto& item : kv.second) {
          ScenarioConfig probe = config;
          apply_at(key, item);  // validates the value in place...
          config = probe;       // ...without keeping it
          values.push_back(flow(item));
        }
        config.sweep.keys.push_back(key);
        config.sweep.values.push_back(std::move(values));
      }
    } else {
      throw ConfigError(where(source, top.first.Mark()) +
                        ": unknown section '" + section + "'");
    }
  }
  if (saw_rounds && saw_budget) {
    throw ConfigError(source +
                      ": set exactly one of run.rounds and run.budget_seconds");
  }
  try {
    validate(config);
  } catch (const ConfigError& e) {
    throw ConfigError(source + ": " + e.what());
  }
  return config;
}

ScenarioConfig parse_canonical(const std::string& text,
                               const std::string& source) {
  ScenarioConfig config;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto eq = line.find(" = ");
    const std::string key = line.substr(0, eq);
    const std::string value =
        eq == std::string::npos ? std::string() : line.substr(eq + 3);
    try {
      if (eq == std::string::npos) throw ConfigError("expected 'key = value'");
      if (key == "name") {
        config.name = value;
      } else if (key == "description") {
        config.description = value;
      } else if (key == "run.rounds" || key == "run.budget_seconds") {
        if (value != "none") apply_setting(config, key, value);
      } else if (key == "sweep.mode") {
        config.sweep.zip = value == "zip";
      } else if (key.rfind("sweep.", 0) == 0) {
        const YAML::Node list = YAML::Load(value);
        if (!list.IsSequence()) throw ConfigError("sweep values must be a list");
        std::vector<std::string> values;
        for (const auto& item : list) values.push_back(flow(item));
        config.sweep.keys.push_back(key.substr(6));
        config.sweep.values.push_back(std::move(values));
      } else {
        apply_setting(config, key, value);
      }
    } catch (const std::exception& e) {
      throw ConfigError(fmt::format("{}:{}: {}", source, line_no, e.what()));
    }
  }
  try {
    validate(config);
  } catch (const ConfigError& e) {
    throw ConfigError(source + ": " + e.what());
  }
  return config;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (text.rfind("name = ", 0) == 0) return parse_canonical(text, path);
  return parse_config(text, path);
}

void validate(const ScenarioConfig& c) {
  if (c.trials < 1) fail("run.trials must be >= 1");
  if (c.rounds.has_value() == c.budget_seconds.has_value()) {
    fail("exactly one of run.rounds and run.budget_seconds must be set");
  }
  if (c.algorithms.empty()) fail("run.algorithms is empty");
  const auto specs = c.algorithm_specs();
  if (c.placement == Placement::kExplicit) {
    if (c.positions.empty()) fail("explicit placement needs positions");
    if (c.camera_count != 0 &&
        c.camera_count != static_cast<int>(c.positions.size())) {
      fail("cameras.count disagrees with the number of positions");
    }
    for (std::size_t i = 0; i < c.positions.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (c.positions[i] == c.positions[j]) {
          fail(fmt::format("cameras {} and {} share a position", j, i));
        }
      }
    }
  } else if (c.camera_count < 1) {
    fail("uniform placement needs cameras.count >= 1");
  }
  const int n = c.placement == Placement::kExplicit
                    ? static_cast<int>(c.positions.size())
                    : c.camera_count;
  for (const auto& o : c.overrides) {
    if (o.index >= n) {
      fail(fmt::format("camera override index {} out of range", o.index));
    }
  }
  if (c.aov > 2.0 * std::numbers::pi + 1e-12) fail("aov exceeds 2 pi");
  for (const auto& o : c.overrides) {
    if (o.aov && *o.aov > 2.0 * std::numbers::pi + 1e-12) {
      fail("aov exceeds 2 pi");
    }
  }
  if (!c.events.empty()) {
    for (const auto& spec : specs) {
      if (spec.sequential()) {
        fail("join/leave events are supported by anaconda and the neighbor "
             "heuristics only");
      }
    }
    for (const auto& e : c.events) {
      if (e.agent >= n) fail(fmt::format("event agent {} out of range", e.agent));
    }
  }
  if (c.budget_seconds) {
    for (const auto& spec : specs) {
      if (spec.kind != AlgorithmKind::kDfsSg && c.delays.zero()) {
        fail("a time budget needs nonzero delays (rounds would take no time)");
      }
    }
  }
  if (c.sweep.keys.size() != c.sweep.values.size()) {
    fail("sweep keys and values disagree");
  }
  if (c.sweep.zip) {
    for (const auto& v : c.sweep.values) {
      if (v.size() != c.sweep.values.front().size()) {
        fail("zipped sweep lists must have equal lengths");
      }
    }
  }
}

std::string canonical_text(const ScenarioConfig& c) {
  std::string out;
  auto line = [&out](const std::string& key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  };
  line("name", c.name);
  line("description", c.description);
  line("world.width_units", num(c.width));
  line("world.height_units", num(c.height));
  line("world.cell_size_units", num(c.cell_size));
  std::vector<std::string> regions;
  for (const auto& r : c.regions) {
    regions.push_back(fmt::format("[{}, {}, {}, {}]", num(r.x0), num(r.y0),
                                  num(r.x1), num(r.y1)));
  }
  line("world.regions", fmt::format("[{}]", fmt::join(regions, ", ")));
  line("cameras.count", std::to_string(c.camera_count));
  line("cameras.placement",
       c.placement == Placement::kExplicit ? "explicit" : "uniform");
  std::vector<std::string> positions;
  for (const auto& p : c.positions) {
    positions.push_back(fmt::format("[{}, {}]", num(p.x), num(p.y)));
  }
  line("cameras.positions", fmt::format("[{}]", fmt::join(positions, ", ")));
  line("cameras.fov_radius_units", num(c.fov_radius));
  line("cameras.aov_radians", num(c.aov));
  line("cameras.directions", std::to_string(c.directions));
  line("cameras.comm_range_units", num(c.comm_range));
  line("cameras.alpha", std::to_string(c.alpha));
  std::vector<std::string> overrides;
  for (const auto& o : c.overrides) {
    std::string s = fmt::format("{{index: {}", o.index);
    if (o.fov_radius) s += ", fov_radius_units: " + num(*o.fov_radius);
    if (o.aov) s += ", aov_radians: " + num(*o.aov);
    if (o.directions) s += ", directions: " + std::to_string(*o.directions);
    if (o.comm_range) s += ", comm_range_units: " + num(*o.comm_range);
    if (o.alpha) s += ", alpha: " + std::to_string(*o.alpha);
    overrides.push_back(s + "}");
  }
  line("cameras.overrides", fmt::format("[{}]", fmt::join(overrides, ", ")));
  line("run.algorithms", fmt::format("[{}]", fmt::join(c.algorithms, ", ")));
  line("run.rounds", c.rounds ? std::to_string(*c.rounds) : "none");
  line("run.budget_seconds", c.budget_seconds ? num(*c.budget_seconds) : "none");
  line("run.trials", std::to_string(c.trials));
  line("run.seed", std::to_string(c.seed));
  line("run.bounds", c.bounds ? "true" : "false");
  line("run.sg_count_computation", c.sg_count_computation ? "true" : "false");
  line("run.bsg_extra_evals", std::to_string(c.bsg_extra_evals));
  line("delays.tau_f_seconds", num(c.delays.tau_f));
  line("delays.tau_c_seconds", num(c.delays.tau_c));
  line("sweep.mode", c.sweep.zip ? "zip" : "grid");
  for (std::size_t k = 0; k < c.sweep.keys.size(); ++k) {
    line("sweep." + c.sweep.keys[k],
         fmt::format("[{}]", fmt::join(c.sweep.values[k], ", ")));
  }
  std::vector<std::string> events;
  for (const auto& e : c.events) {
    events.push_back(fmt::format("{{round: {}, {}: {}}}", e.round,
                                 e.join ? "join" : "leave", e.agent));
  }
  line("events", fmt::format("[{}]", fmt::join(events, ", ")));
  return out;
}

std::string config_digest(const ScenarioConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical_text(config)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

std::vector<SweepPoint> expand_sweep(const ScenarioConfig& config) {
  ScenarioConfig base = config;
  base.sweep = {};
  const auto& keys = config.sweep.keys;
  const auto& values = config.sweep.values;
  std::vector<std::vector<std::size_t>> combos;
  if (keys.empty()) {
    combos.push_back({});
  } else if (config.sweep.zip) {
    for (std::size_t v = 0; v < values.front().size(); ++v) {
      combos.push_back(std::vector<std::size_t>(keys.size(), v));
    }
  } else {
    std::size_t total = 1;
    for (const auto& v : values) total *= v.size();
    // Mixed radix, last key fastest.
    for (std::size_t p = 0; p < total; ++p) {
      std::vector<std::size_t> idx(keys.size());
      std::size_t rest = p;
      for (std::size_t k = keys.size(); k-- > 0;) {
        idx[k] = rest % values[k].size();
        rest /= values[k].size();
      }
      combos.push_back(std::move(idx));
    }
  }
  std::vector<SweepPoint> points;
  for (std::size_t p = 0; p < combos.size(); ++p) {
    SweepPoint point;
    point.index = static_cast<int>(p);
    point.label = "p" + std::to_string(p);
    point.config = base;
    for (std::size_t k = 0; k < keys.size(); ++k) {
      const std::string& value = values[k][combos[p][k]];
      apply_setting(point.config, keys[k], value);
      point.settings.emplace_back(keys[k], value);
    }
    validate(point.config);
    points.push_back(std::move(point));
  }
  return points;
}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const auto& [k, _] : setters()) out.push_back(k);
    return out;
  }();
  return keys;
}

}  // namespace anaconda::scenario
