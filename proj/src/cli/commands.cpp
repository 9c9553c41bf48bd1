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

#include "anaconda/cli/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <numbers>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "anaconda/analysis/bounds.hpp"
#include "anaconda/cli/output.hpp"
#include "anaconda/errors.hpp"
#include "anaconda/objective/set_function.hpp"
#include "anaconda/scenario/config.hpp"
#include "anaconda/scenario/instance.hpp"
#include "anaconda/scenario/presets.hpp"
#include "anaconda/scenario/runner.hpp"

namespace anaconda::cli {
namespace {

using scenario::ScenarioConfig;

// A preset name or a config file path.
ScenarioConfig resolve_config(const std::string& ref) {
  if (!std::filesystem::exists(ref) && scenario::is_preset(ref)) {
    return scenario::load_preset(ref);
  }
  if (ref.rfind("preset:", 0) == 0) return scenario::load_preset(ref.substr(7));
  return scenario::load_config(ref);
}

// The first four street cameras with two headings each (east, west):
// eight singletons, small enough for every exhaustive check.
objective::CoverageOracle urban_micro() {
  ScenarioConfig c = scenario::build_urban_preset();
  std::vector<objective::CameraSpec> cams;
  for (int i = 0; i < 4; ++i) {
    auto cam = c.camera(i, c.positions[i]);
    cam.directions = {0.0, std::numbers::pi};
    cams.push_back(cam);
  }
  const auto world = objective::CoverageWorld::with_regions(
      c.width, c.height, c.regions, std::move(cams), c.cell_size);
  return objective::CoverageOracle::from_world(world);
}

int cmd_presets(std::ostream& out) {
  for (const auto& p : scenario::presets()) {
    const auto config = scenario::parse_config(p.text, "preset:" + p.name);
    out << fmt::format("{:<12} {}\n", p.name, config.description);
  }
  return kExitOk;
}

int cmd_validate(const std::string& ref,
                 const std::vector<std::string>& overrides, std::ostream& out) {
  ScenarioConfig config = resolve_config(ref);
  scenario::apply_overrides(config, overrides);
  scenario::validate(config);
  const auto points = scenario::expand_sweep(config);
  out << fmt::format("ok: {} ({} point{}, {} algorithm{}, {} trial{})\n",
                     config.name, points.size(), points.size() == 1 ? "" : "s",
                     config.algorithms.size(),
                     config.algorithms.size() == 1 ? "" : "s", config.trials,
                     config.trials == 1 ? "" : "s");
  return kExitOk;
}

int cmd_run(const std::string& ref, const std::string& out_dir_arg,
            const std::vector<std::string>& overrides, int jobs, bool quiet,
            std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  ScenarioConfig config = resolve_config(ref);
  scenario::apply_overrides(config, overrides);
  scenario::validate(config);

  std::string out_dir = out_dir_arg;
  if (out_dir.empty()) {
    const char* env = std::getenv(kOutDirEnv);
    out_dir = env != nullptr && *env != '\0' ? env : "anaconda-out";
  }
  const auto result = scenario::run_experiment(config, jobs);

  RunManifest manifest;
  manifest.config_source = ref;
  manifest.overrides = overrides;
  manifest.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  write_outputs(result, out_dir, manifest);

  if (!quiet) {
    for (const auto& p : result.points) {
      std::string settings;
      for (const auto& [k, v] : p.point.settings) {
        settings += fmt::format(" {}={}", k, v);
      }
      out << fmt::format("[{}]{}\n", p.point.label, settings);
      for (const auto& s : p.summaries) {
        out << fmt::format(
            "  {:<14} mean {:6.2f}% +- {:5.2f}  max {:6.2f}% @{}  "
            "last-quarter {:6.2f}%  rounds {}\n",
            s.algorithm, s.mean_pct, s.std_over_rounds, s.curve_max_pct,
            s.curve_max_round, s.last_quarter_mean_pct,
            s.rounds_completed_mean);
      }
    }
    out << "wrote " << out_dir << "\n";
  }
  return kExitOk;
}

int cmd_oracle(const std::string& sub, const std::string& ref,
               std::ostream& out) {
  std::optional<scenario::Instance> instance;
  objective::CoverageOracle micro = urban_micro();
  const objective::CoverageOracle* f = &micro;
  if (!ref.empty() && ref != "urban-micro") {
    instance.emplace(scenario::build_instance(resolve_config(ref), 0));
    f = &instance->oracle;
  }
  const auto ground = analysis::full_ground_set(*f);
  if (sub == "check-submodular") {
    if (ground.size() > objective::kMaxSecondOrderUniverse) {
      throw CapacityError(fmt::format(
          "check-submodular enumerates at most {} singletons, got {}",
          objective::kMaxSecondOrderUniverse, ground.size()));
    }
    const auto audit = objective::audit_submodularity(*f, ground);
    const auto second = objective::check_second_order_submodular(*f, ground);
    if (audit.ok() && second.ok) {
      out << "ok\n";
      return kExitOk;
    }
    out << "violation: "
        << (audit.ok() ? std::string("second-order") : audit.witness) << "\n";
    return kExitFailure;
  }
  if (sub == "brute-force-opt") {
    const auto opt = analysis::brute_force_opt(*f);
    out << fmt::format("f_opt {}\nassignment {}\n", opt.f_opt,
                       opt.assignment.to_string());
    return kExitOk;
  }
  if (sub == "curvature") {
    out << fmt::format("kappa_f {}\n", objective::curvature(*f, ground));
    return kExitOk;
  }
  throw scenario::ConfigError("unknown oracle subcommand '" + sub + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Bandit submodular coordination simulator", "anaconda"};
  app.require_subcommand(1);

  std::string ref;
  std::string out_dir;
  std::vector<std::string> overrides;
  int jobs = 1;
  bool quiet = false;
  auto* run = app.add_subcommand("run", "run a config file or preset");
  run->add_option("config", ref, "config path or preset name")->required();
  run->add_option("--out,-o", out_dir,
                  std::string("output directory (default $") + kOutDirEnv +
                      " or ./anaconda-out)");
  run->add_option("--override", overrides, "key=value settings")
      ->expected(1, -1);
  run->add_option("--jobs,-j", jobs, "trial-level threads")
      ->check(CLI::PositiveNumber);
  run->add_flag("--quiet,-q", quiet, "no summary on stdout");

  app.add_subcommand("presets", "list the shipped scenarios");

  std::string validate_ref;
  std::vector<std::string> validate_overrides;
  auto* validate_cmd =
      app.add_subcommand("validate", "check a config without running it");
  validate_cmd->add_option("config", validate_ref, "config path or preset")
      ->required();
  validate_cmd->add_option("--override", validate_overrides, "key=value")
      ->expected(1, -1);

  std::string oracle_sub;
  std::string oracle_ref;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "exhaustive checks: check-submodular, brute-force-opt, "
                "curvature");
  oracle_cmd->add_option("check", oracle_sub)->required();
  oracle_cmd->add_option("--instance", oracle_ref,
                         "urban-micro (default), a preset or a config path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(ref, out_dir, overrides, jobs, quiet, out);
    if (app.got_subcommand("presets")) return cmd_presets(out);
    if (validate_cmd->parsed()) {
      return cmd_validate(validate_ref, validate_overrides, out);
    }
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_sub, oracle_ref, out);
  } catch (const ConnectivityError& e) {
    err << "error: connectivity: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const CapacityError& e) {
    err << "error: capacity: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InfiniteRoundsError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace anaconda::cli
