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

#include "anaconda/cli/output.hpp"

#include <fstream>

#include <fmt/format.h>

#include "anaconda/errors.hpp"

namespace anaconda::cli {
namespace {

using nlohmann::ordered_json;

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

ordered_json audit_json(const scenario::EvalAudit& a) {
  ordered_json j;
  j["rounds"] = a.rounds;
  j["agent_rounds"] = a.agent_rounds;
  j["eval_calls"] = a.eval_calls;
  j["eval_charged"] = a.eval_charged;
  j["eval_mismatches"] = a.eval_mismatches;
  j["bandwidth_violations"] = a.bandwidth_violations;
  j["neighborhood_violations"] = a.neighborhood_violations;
  j["messages"] = a.messages;
  return j;
}

ordered_json summary_of(const scenario::AlgorithmSummary& s) {
  ordered_json j;
  j["algorithm"] = s.algorithm;
  j["trials"] = s.trials;
  j["mean_pct"] = s.mean_pct;
  j["std_over_trials_pct"] = s.std_over_trials;
  j["std_over_rounds_pct"] = s.std_over_rounds;
  j["min_pct"] = s.curve_min_pct;
  j["min_round"] = s.curve_min_round;
  j["max_pct"] = s.curve_max_pct;
  j["max_round"] = s.curve_max_round;
  j["last_quarter_mean_pct"] = s.last_quarter_mean_pct;
  j["trial_mean_pct"] = s.trial_mean_pct;
  j["trial_max_pct"] = s.trial_max_pct;
  j["rounds_completed_mean"] = s.rounds_completed_mean;
  j["rounds_completed_min"] = s.rounds_completed_min;
  j["rounds_completed_max"] = s.rounds_completed_max;
  j["round_time_s"] = s.round_time_mean;
  j["placement_rejections"] = s.placement_rejections;
  j["audit"] = audit_json(s.audit);
  if (s.bounds) {
    const auto& b = *s.bounds;
    ordered_json bj;
    bj["trials"] = b.trials;
    bj["kappa_f"] = b.kappa_f;
    bj["kappa_I"] = b.kappa_i;
    bj["rho"] = b.rho;
    bj["beta_hat"] = b.beta_hat;
    bj["f_opt"] = b.f_opt;
    bj["apriori_lb"] = b.apriori_lb;
    bj["aposteriori_lb"] = b.aposteriori_lb;
    bj["asymptotic_lb"] = b.asymptotic_lb;
    bj["empirical_mean_f"] = b.empirical_mean_f;
    bj["apriori_holds_fraction"] = b.apriori_holds;
    bj["aposteriori_holds_fraction"] = b.aposteriori_holds;
    bj["asymptotic_holds_fraction"] = b.asymptotic_holds;
    j["bounds"] = bj;
  } else {
    j["bounds"] = nullptr;
  }
  return j;
}

std::string file_stem(const std::string& label, const std::string& algo) {
  return label + "_" + algo;
}

}  // namespace

std::string trials_csv(const std::vector<scenario::TrialResult>& trials) {
  std::string out = fmt::format("# schema_version={}\n", kSchemaVersion);
  out += "trial,round,sim_time_s,f_value,coverage_pct,beta_running\n";
  for (const auto& t : trials) {
    for (const auto& r : t.series) {
      out += fmt::format("{},{},{},{},{},{}\n", t.trial, r.round, r.sim_time,
                         r.f_value, r.coverage_pct, r.beta_running);
    }
  }
  return out;
}

std::string curve_csv(const scenario::AlgorithmSummary& s) {
  std::string out = fmt::format("# schema_version={}\n", kSchemaVersion);
  out += "round,trials,mean_sim_time_s,mean_coverage_pct,std_coverage_pct\n";
  for (const auto& p : s.curve) {
    out += fmt::format("{},{},{},{},{}\n", p.round, p.trials, p.mean_sim_time,
                       p.mean_pct, p.std_pct);
  }
  return out;
}

ordered_json bound_json(const analysis::BoundReport& r) {
  ordered_json j;
  j["kappa_f"] = r.kappa_f;
  j["kappa_I"] = r.kappa_i;
  j["rho"] = r.rho;
  j["beta_hat"] = r.beta_hat;
  j["f_opt"] = r.f_opt;
  j["apriori_lb"] = r.apriori_lb;
  j["aposteriori_lb"] = r.aposteriori_lb;
  j["asymptotic_lb"] = r.asymptotic_lb;
  j["empirical_mean_f"] = r.empirical_mean_f;
  j["slack"] = r.slack;
  j["window_rounds"] = r.window_rounds;
  j["apriori_holds"] = r.apriori_holds;
  j["aposteriori_holds"] = r.aposteriori_holds;
  j["asymptotic_holds"] = r.asymptotic_holds;
  return j;
}

ordered_json summary_json(const scenario::ExperimentResult& result) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = result.config.name;
  j["config_digest"] = scenario::config_digest(result.config);
  j["seed"] = result.config.seed;
  j["delays"] = {{"tau_f_seconds", result.config.delays.tau_f},
                 {"tau_c_seconds", result.config.delays.tau_c}};
  j["bsg_extra_evals"] = result.config.bsg_extra_evals;
  ordered_json points = ordered_json::array();
  for (const auto& p : result.points) {
    ordered_json pj;
    pj["point"] = p.point.label;
    ordered_json settings = ordered_json::object();
    for (const auto& [k, v] : p.point.settings) settings[k] = v;
    pj["settings"] = settings;
    ordered_json algos = ordered_json::array();
    for (const auto& s : p.summaries) algos.push_back(summary_of(s));
    pj["algorithms"] = algos;
    points.push_back(pj);
  }
  j["points"] = points;
  return j;
}

ordered_json manifest_json(const RunManifest& m) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["version"] = m.version;
  j["config_digest"] = m.config_digest;
  j["seed"] = m.seed;
  j["config_source"] = m.config_source;
  j["overrides"] = m.overrides;
  j["outputs"] = m.outputs;
  j["wall_seconds"] = m.wall_seconds;
  return j;
}

void write_outputs(const scenario::ExperimentResult& result,
                   const std::filesystem::path& out_dir,
                   RunManifest& manifest) {
  std::filesystem::create_directories(out_dir);
  manifest.outputs.clear();
  auto emit = [&](const std::string& name, const std::string& text) {
    write_file(out_dir / name, text);
    manifest.outputs.push_back(name);
  };
  for (const auto& p : result.points) {
    for (std::size_t a = 0; a < p.summaries.size(); ++a) {
      const std::string stem =
          file_stem(p.point.label, p.summaries[a].algorithm);
      emit("trials_" + stem + ".csv", trials_csv(p.trials[a]));
      emit("curves_" + stem + ".csv", curve_csv(p.summaries[a]));
    }
  }
  emit("summary.json", summary_json(result).dump(2) + "\n");
  emit("config.canonical", scenario::canonical_text(result.config));
  manifest.config_digest = scenario::config_digest(result.config);
  manifest.seed = result.config.seed;
  write_file(out_dir / "manifest.json", manifest_json(manifest).dump(2) + "\n");
}

}  // namespace anaconda::cli
