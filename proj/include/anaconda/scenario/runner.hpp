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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "anaconda/analysis/bounds.hpp"
#include "anaconda/coordination/round.hpp"
#include "anaconda/scenario/config.hpp"
#include "anaconda/scenario/instance.hpp"

namespace anaconda::scenario {

struct SeriesRow {
  int round = 0;
  double sim_time = 0.0;
  double f_value = 0.0;
  double coverage_pct = 0.0;
  double beta_running = 0.0;  // cumulative sum of marginals / sum of f
};

// Per-round checks of the coordination constraints and the evaluation
// accounting, summed over agents and rounds.
struct EvalAudit {
  long rounds = 0;
  long agent_rounds = 0;
  long eval_calls = 0;
  long eval_charged = 0;
  long eval_mismatches = 0;        // agent-rounds with calls != charged
  long bandwidth_violations = 0;   // |N_i| > alpha_i
  long neighborhood_violations = 0;  // N_i not inside M_i
  long messages = 0;

  bool clean() const {
    return eval_mismatches == 0 && bandwidth_violations == 0 &&
           neighborhood_violations == 0;
  }
  void merge(const EvalAudit& other);
};

struct TrialResult {
  int trial = 0;
  std::string algorithm;
  std::vector<SeriesRow> series;
  std::vector<std::vector<int>> final_neighborhoods;
  EvalAudit audit;
  long placement_rejections = 0;
  double round_time = 0.0;  // simulated seconds per round at the start
  long rounds_completed = 0;

  double mean_pct = 0.0;
  double std_pct = 0.0;
  double min_pct = 0.0;
  double max_pct = 0.0;
  int min_round = 0;
  int max_round = 0;
  double last_quarter_mean_pct = 0.0;

  std::optional<analysis::BoundReport> bounds;
};

struct TrialHooks {
  std::function<void(const coord::RoundRecord&)> on_round;
  // Visit agents in a seeded random order inside each phase (ANACONDA).
  std::optional<std::uint64_t> shuffle_seed;
};

// Rounds a run will play: the configured count, or the budget divided by
// the algorithm's per-round time on this instance.
long planned_rounds(const ScenarioConfig& config, const Instance& instance,
                    const AlgorithmSpec& algorithm);
double per_round_time(const ScenarioConfig& config, const Instance& instance,
                      const AlgorithmSpec& algorithm);

// Whether exhaustive bound evaluation is affordable on this instance.
bool bounds_feasible(const Instance& instance);

TrialResult run_trial(const ScenarioConfig& config, const Instance& instance,
                      const AlgorithmSpec& algorithm, int trial,
                      const TrialHooks& hooks = {});
TrialResult run_trial(const ScenarioConfig& config,
                      const std::string& algorithm, int trial,
                      const TrialHooks& hooks = {});

struct CurvePoint {
  int round = 0;
  int trials = 0;  // trials that reached this round
  double mean_sim_time = 0.0;
  double mean_pct = 0.0;
  double std_pct = 0.0;
};

struct BoundSummary {
  int trials = 0;
  double kappa_f = 0.0;
  double kappa_i = 0.0;
  double rho = 0.0;
  double beta_hat = 0.0;
  double f_opt = 0.0;
  double apriori_lb = 0.0;
  double aposteriori_lb = 0.0;
  double asymptotic_lb = 0.0;
  double empirical_mean_f = 0.0;
  double apriori_holds = 0.0;  // fraction of trials
  double aposteriori_holds = 0.0;
  double asymptotic_holds = 0.0;
};

struct AlgorithmSummary {
  std::string algorithm;
  int trials = 0;
  // Whole-run mean coverage: per-trial means averaged over trials.
  double mean_pct = 0.0;
  double std_over_trials = 0.0;
  // Standard deviation over rounds of the trial-averaged curve.
  double std_over_rounds = 0.0;
  double curve_min_pct = 0.0;
  int curve_min_round = 0;
  double curve_max_pct = 0.0;
  int curve_max_round = 0;
  double last_quarter_mean_pct = 0.0;
  std::vector<double> trial_mean_pct;
  std::vector<double> trial_max_pct;
  std::vector<double> trial_last_quarter_pct;
  double rounds_completed_mean = 0.0;
  long rounds_completed_min = 0;
  long rounds_completed_max = 0;
  double round_time_mean = 0.0;
  long placement_rejections = 0;
  EvalAudit audit;
  std::vector<CurvePoint> curve;
  std::optional<BoundSummary> bounds;
};

AlgorithmSummary summarize(const std::string& algorithm,
                           const std::vector<TrialResult>& trials);

struct PointResult {
  SweepPoint point;
  std::vector<AlgorithmSummary> summaries;   // one per algorithm
  std::vector<std::vector<TrialResult>> trials;  // [algorithm][trial]
};

struct ExperimentResult {
  ScenarioConfig config;
  std::vector<PointResult> points;
};

// Runs every sweep point, algorithm and trial. Trials run on `jobs`
// threads; results do not depend on the job count.
ExperimentResult run_experiment(const ScenarioConfig& config, int jobs = 1);

}  // namespace anaconda::scenario
