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

// Acceptance run: one PASS/FAIL line per criterion, with the measured
// numbers. Exit status is the number of failed criteria (capped at 125).
//
//   anaconda_acceptance [--only N[,N...]] [--quick]
//
// --quick shrinks the long experiments for smoke testing; its verdicts are
// not the acceptance verdicts.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "anaconda/analysis/bounds.hpp"
#include "anaconda/bandit/exp3.hpp"
#include "anaconda/benchmarks/comm_graph.hpp"
#include "anaconda/benchmarks/sequential_greedy.hpp"
#include "anaconda/cli/commands.hpp"
#include "anaconda/coordination/round.hpp"
#include "anaconda/errors.hpp"
#include "anaconda/objective/set_function.hpp"
#include "anaconda/scenario/config.hpp"
#include "anaconda/scenario/instance.hpp"
#include "anaconda/scenario/presets.hpp"
#include "anaconda/scenario/runner.hpp"
#include "anaconda/timing/delay_model.hpp"
#include "micro.hpp"
#include "properties.hpp"
#include "support.hpp"

namespace {

using namespace anaconda;
using Clock = std::chrono::steady_clock;

bool quick = false;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const scenario::AlgorithmSummary& find_algo(const scenario::PointResult& p,
                                            const std::string& token) {
  for (const auto& s : p.summaries) {
    if (s.algorithm == token) return s;
  }
  throw std::runtime_error("algorithm " + token + " missing from results");
}

std::string setting(const scenario::SweepPoint& p, const std::string& key) {
  for (const auto& [k, v] : p.settings) {
    if (k == key) return v;
  }
  return "";
}

// Structural optimum of the street-block layout: left-edge cameras face
// north-east (heading index 2 of 16), right-edge ones south-west (10).
double structural_optimum_pct() {
  auto f = objective::CoverageOracle::from_world(scenario::build_urban_world());
  objective::JointAssignment a;
  for (int i = 0; i < 8; ++i) a.insert(i, i % 2 == 0 ? 2 : 10);
  return f.coverage_percent(f.eval(a));
}

// ---------------------------------------------------------------- 1 and 2
const scenario::ExperimentResult& urban_result(double* wall) {
  static scenario::ExperimentResult result;
  static double elapsed = -1.0;
  if (elapsed < 0.0) {
    auto cfg = scenario::load_preset("urban");
    const auto start = Clock::now();
    result = scenario::run_experiment(cfg, 1);
    elapsed = seconds_since(start);
  }
  if (wall) *wall = elapsed;
  return result;
}

Verdict criterion_1() {
  double wall = 0.0;
  const auto& p = urban_result(&wall).points.at(0);
  const double ours = find_algo(p, "anaconda-1n").mean_pct;
  const double rnd = find_algo(p, "random-1n").mean_pct;
  const double near = find_algo(p, "nearest-1n").mean_pct;
  const double gain = (ours - near) / near;
  const bool order = ours > rnd && rnd > near;
  const bool improve = gain >= 0.15;
  const bool level = std::abs(ours - 71.89) <= 6.0;
  const bool fast = wall < 120.0;
  return {order && improve && level && fast,
          fmt::format("mean coverage anaconda {:.2f} random {:.2f} nearest "
                      "{:.2f} | ordering {} | gain {:.1f}% (>= 15%) | |{:.2f} - "
                      "71.89| = {:.2f} (<= 6) | {:.1f} s",
                      ours, rnd, near, order ? "ok" : "violated", 100 * gain,
                      ours, std::abs(ours - 71.89), wall)};
}

Verdict criterion_2() {
  const double opt = structural_optimum_pct();
  const auto& s = find_algo(urban_result(nullptr).points.at(0), "anaconda-1n");
  int close = 0;
  for (double m : s.trial_max_pct) close += std::abs(m - 77.25) <= 3.0;
  const bool value_ok = std::abs(opt - 77.25) <= 1.5;
  const bool reach_ok = close >= 15;
  return {value_ok && reach_ok,
          fmt::format("structural optimum {:.2f}% (77.25 +- 1.5: {}) | trials "
                      "with max within 3 points: {}/{} (>= 15)",
                      opt, value_ok ? "ok" : "outside", close,
                      s.trial_max_pct.size())};
}

// ---------------------------------------------------------------------- 3
Verdict criterion_3() {
  // Mixed bandwidths, including bypass and alpha 0, with delays.
  auto cfg = scenario::parse_config(R"(
world: {width_units: 30, height_units: 30}
cameras: {count: 6, placement: uniform, fov_radius_units: 7, directions: 8,
          comm_range_units: 14, alpha: 2,
          overrides: [{index: 0, alpha: 0}, {index: 1, alpha: 5}, {index: 2, alpha: 1}]}
run: {algorithms: [anaconda], rounds: 300, trials: 3, seed: 3}
delays: {tau_f_seconds: 0.013, tau_c_seconds: 0.007}
)");
  long records = 0, time_mismatch = 0, eval_mismatch = 0;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    auto inst = scenario::build_instance(cfg, trial);
    scenario::TrialHooks hooks;
    hooks.on_round = [&](const coord::RoundRecord& r) {
      ++records;
      int slowest = 0;
      for (const auto& a : r.agents) {
        const int alpha = std::min(inst.bandwidths[a.agent],
                                   static_cast<int>(inst.neighborhoods[a.agent].size()));
        slowest = std::max(slowest, alpha);
        if (a.eval_calls != 2 * alpha + 3) ++eval_mismatch;
      }
      const double expected = 0.013 * (2 * slowest + 3) + 0.007;
      if (r.duration != timing::anaconda_round_time(slowest, cfg.delays) ||
          std::abs(r.duration - expected) > 1e-15) {
        ++time_mismatch;
      }
    };
    auto res = scenario::run_trial(cfg, inst, scenario::parse_algorithm("anaconda"),
                                   trial, hooks);
    if (!res.audit.clean()) ++eval_mismatch;
  }
  // Budget mode.
  auto sc = scenario::load_preset("scalability");
  auto first = scenario::expand_sweep(sc).at(0).config;
  first.trials = 1;
  auto inst = scenario::build_instance(first, 0);
  auto res = scenario::run_trial(first, inst, scenario::parse_algorithm("anaconda"), 0);
  const bool budget_ok = res.rounds_completed == 2142;
  return {time_mismatch == 0 && eval_mismatch == 0 && budget_ok,
          fmt::format("{} rounds checked: round-time mismatches {}, evaluation "
                      "mismatches {} | budget 300 s, alpha 5, (0.01, 0.01): "
                      "{} rounds (2142)",
                      records, time_mismatch, eval_mismatch,
                      res.rounds_completed)};
}

// ---------------------------------------------------------------------- 4
Verdict criterion_4() {
  auto cfg = scenario::load_preset("scalability");
  if (quick) cfg.trials = 2;
  const auto start = Clock::now();
  auto result = scenario::run_experiment(cfg, 1);
  const double wall = seconds_since(start);
  std::vector<long> ours_min, ours_max;
  std::vector<double> bsg;
  std::string sizes;
  for (const auto& p : result.points) {
    const auto& a = find_algo(p, "anaconda");
    const auto& b = find_algo(p, "dfs-bsg");
    ours_min.push_back(a.rounds_completed_min);
    ours_max.push_back(a.rounds_completed_max);
    bsg.push_back(b.rounds_completed_mean);
    sizes += fmt::format(" N={}: {}/{:.1f}", setting(p.point, "cameras.count"),
                         a.rounds_completed_min, b.rounds_completed_mean);
  }
  bool identical = true;
  for (std::size_t k = 0; k < ours_min.size(); ++k) {
    identical &= ours_min[k] == ours_min[0] && ours_max[k] == ours_min[0];
  }
  bool decreasing = true;
  for (std::size_t k = 1; k < bsg.size(); ++k) decreasing &= bsg[k] < bsg[k - 1];
  const double drop = bsg.front() / bsg.back();
  return {identical && decreasing && drop >= 10.0 && wall < 900.0,
          fmt::format("rounds anaconda/dfs-bsg:{} | anaconda identical {} | "
                      "dfs-bsg strictly decreasing {} | drop {:.1f}x (>= 10) | "
                      "{:.1f} s",
                      sizes, identical ? "yes" : "no",
                      decreasing ? "yes" : "no", drop, wall)};
}

// ---------------------------------------------------------------------- 5
struct SmallCase {
  testing_support::SmallInstance inst;
  int alpha = 0;
};

SmallCase small_case(int index) {
  auto rng = bandit::Rng::derive(0x5EED5, {static_cast<std::uint64_t>(index)});
  const int agents = 2 + static_cast<int>(rng.below(3));
  const int actions = 2 + static_cast<int>(rng.below(3));
  const int universe = 20 + static_cast<int>(rng.below(21));
  const double density = 0.2 + 0.3 * rng.uniform01();
  const int alpha = static_cast<int>(rng.below(agents));
  return {testing_support::random_instance(rng, agents, actions, universe, density),
          alpha};
}

Verdict criterion_5() {
  const int instances = 200;
  const int horizon = quick ? 2000 : 20000;
  const int trials = quick ? 2 : 20;
  int sg_ok = 0, post_ok = 0, asym_ok = 0, degenerate = 0;
  double worst_sg = 1e9;
  for (int k = 0; k < instances; ++k) {
    const auto c = small_case(k);
    const auto& f = c.inst.oracle;
    const int n = f.agent_count();
    auto m = testing_support::all_others(n);

    // (a) DFS-SG on the complete graph.
    auto sg = bench::dfs_sg_run(f, bench::CommGraph::from_neighborhoods(m));
    auto opt = analysis::brute_force_opt(f);
    double kappa = 0.0;
    try {
      kappa = objective::curvature(f, analysis::full_ground_set(f));
    } catch (const DegenerateFunctionError&) {
      ++degenerate;
    }
    const double sg_ratio = opt.f_opt > 0 ? sg.f_value * (1 + kappa) / opt.f_opt : 1.0;
    worst_sg = std::min(worst_sg, sg_ratio);
    sg_ok += sg.f_value >= opt.f_opt / (1.0 + kappa) - 1e-9;

    // (b), (c): last-quarter window pooled over trials.
    analysis::BoundAccumulator window;
    for (int trial = 0; trial < trials; ++trial) {
      std::vector<coord::AgentState> agents;
      const auto seed = bandit::Rng::derive(0xB0B, {static_cast<std::uint64_t>(k),
                                                    static_cast<std::uint64_t>(trial)})
                            .key();
      for (int i = 0; i < n; ++i) {
        agents.emplace_back(i, f.action_count(i), m[i], c.alpha, f.normalizer(i),
                            horizon, seed);
      }
      coord::RoundClock clock;
      for (int t = 1; t <= horizon; ++t) {
        auto r = coord::anaconda_round(agents, f, t, clock);
        if (t > horizon - horizon / 4) window.add(r);
      }
    }
    std::vector<int> alphas(n, c.alpha);
    analysis::BoundOptions opts;
    opts.apriori = false;
    auto report = analysis::evaluate_bounds(window, f, m, alphas, opts);
    post_ok += report.aposteriori_holds;
    asym_ok += report.asymptotic_holds;
  }
  const bool a = sg_ok == instances;
  const bool b = post_ok >= 0.95 * instances;
  const bool cc = asym_ok >= 0.95 * instances;
  return {a && b && cc,
          fmt::format("{} instances, T = {}, {} trials each | (a) dfs-sg bound "
                      "{}/{} (worst f_sg (1 + k) / f_opt = {:.3f}) | (b) a "
                      "posteriori {}/{} (>= 95%) | (c) max-of-branches {}/{} "
                      "(>= 95%) | degenerate curvature {}",
                      instances, horizon, trials, sg_ok, instances, worst_sg,
                      post_ok, instances, asym_ok, instances, degenerate)};
}

// ---------------------------------------------------------------------- 6
Verdict criterion_6() {
  int ok = 0;
  long long checks = 0;
  std::string first;
  for (int k = 0; k < 100; ++k) {
    auto rep = testing_support::check_all_properties(
        testing_support::property_instance(0xACCE97, k));
    ok += rep.ok();
    checks += rep.checks;
    if (!rep.ok() && first.empty()) first = rep.first_failure;
  }
  int rho_bad = 0;
  const double floor_value = 1.0 - 1.0 / std::numbers::e;
  for (int i = 0; i < 100; ++i) {
    for (int alpha = 1; alpha <= 20; ++alpha) {
      const double r = analysis::rho(i / 99.0, alpha);
      rho_bad += r > 1.0 + 1e-12 || r < floor_value - 1e-12;
    }
  }
  return {ok == 100 && rho_bad == 0,
          fmt::format("normalization, monotonicity, submodularity, second "
                      "order, VoC monotone + submodular: {}/100 instances "
                      "({} checks){} | rho outside [1 - 1/e, 1]: {} of 2000",
                      ok, checks, first.empty() ? "" : " first failure: " + first,
                      rho_bad)};
}

// ---------------------------------------------------------------------- 7
double bernoulli_regret(int horizon, int seeds) {
  const double means[2] = {0.9, 0.1};
  double total = 0.0;
  for (int s = 0; s < seeds; ++s) {
    bandit::Exp3 b(2, horizon);
    auto pick = bandit::Rng::derive(0x7E57, {1, static_cast<std::uint64_t>(s)});
    auto coin = bandit::Rng::derive(0x7E57, {2, static_cast<std::uint64_t>(s)});
    for (int t = 0; t < horizon; ++t) {
      const int a = b.sample(pick);
      total += means[0] - means[a];
      b.update(a, coin.uniform01() < means[a] ? 1.0 : 0.0);
    }
  }
  return total / seeds;
}

Verdict criterion_7() {
  const double r3 = bernoulli_regret(1000, 50);
  const double r4 = bernoulli_regret(10000, 50);
  const double cap = 3.0 * std::sqrt(2.0 * 10000 * 2 * std::log(2.0));
  const bool trend = r4 / 10000 < r3 / 1000;
  const bool bounded = r4 <= cap;

  // Agent 0 covers cells 0..9 and may listen to one of three neighbors
  // that overlap it by 6, 3 and 0 cells. Neighbors have no choices.
  using testing_support::to_cell_set;
  std::vector<std::vector<objective::CellSet>> fp(4);
  fp[0].push_back(to_cell_set({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 24));
  fp[1].push_back(to_cell_set({4, 5, 6, 7, 8, 9, 10, 11}, 24));
  fp[2].push_back(to_cell_set({7, 8, 9, 12, 13, 14}, 24));
  fp[3].push_back(to_cell_set({15, 16, 17, 18, 19}, 24));
  objective::CoverageOracle f(fp, 1.0);
  const int horizon = 10000;
  std::vector<coord::AgentState> agents;
  agents.emplace_back(0, 1, std::vector<int>{1, 2, 3}, 1, f.normalizer(0), horizon, 71);
  for (int j = 1; j < 4; ++j) {
    agents.emplace_back(j, 1, std::vector<int>{}, 0, f.normalizer(j), horizon, 71);
  }
  coord::RoundClock clock;
  int hits = 0, tail = 0;
  for (int t = 1; t <= horizon; ++t) {
    auto r = coord::anaconda_round(agents, f, t, clock);
    if (t > horizon - horizon / 4) {
      ++tail;
      hits += r.find(0)->neighbors == std::vector<int>{1};
    }
  }
  const double freq = static_cast<double>(hits) / tail;
  return {trend && bounded && freq > 0.8,
          fmt::format("regret/T {:.4f} at 1e3 vs {:.4f} at 1e4 | regret {:.1f} "
                      "<= {:.1f} | best-neighbor frequency over last quarter "
                      "{:.3f} (> 0.8)",
                      r3 / 1000, r4 / 10000, r4, cap, freq)};
}

// ---------------------------------------------------------------------- 8
Verdict criterion_8() {
  auto cfg = scenario::load_preset("no-delay");
  // Only the c = 16 column at alpha 0, 1, 3, 5 is needed.
  cfg.sweep.zip = true;
  cfg.sweep.keys = {"cameras.comm_range_units", "cameras.alpha"};
  cfg.sweep.values = {{"16", "16", "16", "16"}, {"0", "1", "3", "5"}};
  if (quick) cfg.trials = 3;
  auto result = scenario::run_experiment(cfg, 1);
  std::vector<double> lq;
  for (const auto& p : result.points) {
    lq.push_back(p.summaries.at(0).last_quarter_mean_pct);
  }
  bool monotone = true;
  for (std::size_t k = 1; k < lq.size(); ++k) monotone &= lq[k] >= lq[k - 1] - 1.5;
  const double first_gain = lq[1] - lq[0];
  const double last_gain = lq[3] - lq[2];
  return {monotone && first_gain > last_gain,
          fmt::format("last-quarter coverage at alpha 0/1/3/5: {:.2f} {:.2f} "
                      "{:.2f} {:.2f} | nondecreasing within 1.5: {} | gain "
                      "0->1 {:.2f} > 3->5 {:.2f}",
                      lq[0], lq[1], lq[2], lq[3], monotone ? "yes" : "no",
                      first_gain, last_gain)};
}

// ---------------------------------------------------------------------- 9
Verdict criterion_9() {
  auto cfg = scenario::load_preset("delay");
  if (quick) cfg.trials = 3;
  auto result = scenario::run_experiment(cfg, 1);
  // tau_f -> alpha -> mean coverage; and the DFS-BSG mean per tau_f.
  std::map<std::string, std::map<int, double>> ours;
  std::map<std::string, double> bsg;
  for (const auto& p : result.points) {
    const std::string tf = setting(p.point, "delays.tau_f_seconds");
    const int alpha = std::stoi(setting(p.point, "cameras.alpha"));
    ours[tf][alpha] = find_algo(p, "anaconda").mean_pct;
    bsg[tf] = std::max(bsg[tf], find_algo(p, "dfs-bsg").mean_pct);
  }
  auto best_alpha = [&](const std::string& tf) {
    int best = 0;
    double value = -1.0;
    for (const auto& [alpha, v] : ours.at(tf)) {
      if (v > value) {
        value = v;
        best = alpha;
      }
    }
    return best;
  };
  const int slow = best_alpha("0.09");
  const int fast = best_alpha("0.01");
  bool dominate = true;
  double margin = 1e9;
  for (const auto& [tf, by_alpha] : ours) {
    for (const auto& [alpha, v] : by_alpha) {
      dominate &= v > bsg.at(tf);
      margin = std::min(margin, v - bsg.at(tf));
    }
  }
  std::string table;
  for (const auto& [tf, by_alpha] : ours) {
    table += fmt::format(" tau_f={}:", tf);
    for (const auto& [alpha, v] : by_alpha) table += fmt::format(" {:.2f}", v);
    table += fmt::format(" (bsg {:.2f})", bsg.at(tf));
  }
  return {slow < fast && dominate,
          fmt::format("best alpha {} at (0.09, 0.03) vs {} at (0.01, 0.03) | "
                      "every variant above dfs-bsg: {} (min margin {:.2f}) |{}",
                      slow, fast, dominate ? "yes" : "no", margin, table)};
}

// --------------------------------------------------------------------- 10
Verdict criterion_10() {
  namespace fs = std::filesystem;
  int identical = 0, files = 0;
  for (const char* preset : {"urban", "scalability"}) {
    const fs::path a = fs::temp_directory_path() / (std::string("acc_a_") + preset);
    const fs::path b = fs::temp_directory_path() / (std::string("acc_b_") + preset);
    fs::remove_all(a);
    fs::remove_all(b);
    std::ostringstream out, err;
    const std::vector<std::string> extra{"--override", "trials=2", "--quiet"};
    auto args = [&](const fs::path& dir) {
      std::vector<std::string> v{"run", preset, "--out", dir.string()};
      v.insert(v.end(), extra.begin(), extra.end());
      if (std::string(preset) == "scalability") {
        v.push_back("--override");
        v.push_back("run.budget_seconds=30");
      }
      return v;
    };
    if (cli::run_cli(args(a), out, err) != 0 || cli::run_cli(args(b), out, err) != 0) {
      return {false, "run failed: " + err.str()};
    }
    for (const auto& entry : fs::directory_iterator(a)) {
      if (entry.path().extension() != ".csv") continue;
      ++files;
      identical += testing_support::read_file(entry.path().string()) ==
                   testing_support::read_file((b / entry.path().filename()).string());
    }
  }
  // Shuffled execution order inside the synchronous phases.
  auto cfg = scenario::load_preset("urban");
  auto inst = scenario::build_instance(cfg, 0);
  std::vector<coord::RoundRecord> plain, shuffled;
  scenario::TrialHooks h1, h2;
  h1.on_round = [&](const coord::RoundRecord& r) { plain.push_back(r); };
  h2.on_round = [&](const coord::RoundRecord& r) { shuffled.push_back(r); };
  h2.shuffle_seed = 424242;
  auto algo = scenario::parse_algorithm("anaconda-1n");
  scenario::run_trial(cfg, inst, algo, 0, h1);
  scenario::run_trial(cfg, inst, algo, 0, h2);
  long same = 0;
  for (std::size_t t = 0; t < std::min(plain.size(), shuffled.size()); ++t) {
    const auto& x = plain[t];
    const auto& y = shuffled[t];
    bool eq = x.actions == y.actions && x.f_value == y.f_value &&
              x.messages == y.messages && x.duration == y.duration &&
              x.agents.size() == y.agents.size();
    for (std::size_t k = 0; eq && k < x.agents.size(); ++k) {
      eq = x.agents[k].picks == y.agents[k].picks &&
           x.agents[k].marginal == y.agents[k].marginal &&
           x.agents[k].slot_rewards == y.agents[k].slot_rewards;
    }
    same += eq;
  }
  const bool records_ok =
      plain.size() == shuffled.size() && same == static_cast<long>(plain.size());
  return {files > 0 && identical == files && records_ok,
          fmt::format("byte-identical CSVs {}/{} (urban, scalability) | "
                      "shuffled-order RoundRecords identical {}/{}",
                      identical, files, same, plain.size())};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--quick") {
      quick = true;
    } else if (arg == "--only" && i + 1 < argc) {
      std::stringstream list(argv[++i]);
      std::string item;
      while (std::getline(list, item, ',')) only.insert(std::stoi(item));
    } else {
      std::fprintf(stderr, "usage: %s [--only N[,N...]] [--quick]\n", argv[0]);
      return 2;
    }
  }
  const std::vector<std::pair<int, std::function<Verdict()>>> criteria{
      {1, criterion_1}, {2, criterion_2}, {3, criterion_3}, {4, criterion_4},
      {5, criterion_5}, {6, criterion_6}, {7, criterion_7}, {8, criterion_8},
      {9, criterion_9}, {10, criterion_10}};
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    if (!only.empty() && !only.count(id)) continue;
    const auto start = Clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("criterion %2d: %s  %s  [%.1f s]\n", id, v.pass ? "PASS" : "FAIL",
                v.detail.c_str(), seconds_since(start));
    std::fflush(stdout);
  }
  return std::min(failed, 125);
}
