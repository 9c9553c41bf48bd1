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

#include "anaconda/scenario/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>
#include <utility>

#include "anaconda/bandit/rng.hpp"
#include "anaconda/benchmarks/comm_graph.hpp"
#include "anaconda/benchmarks/heuristics.hpp"
#include "anaconda/benchmarks/sequential_greedy.hpp"
#include "anaconda/coordination/agent.hpp"
#include "anaconda/errors.hpp"
#include "anaconda/timing/delay_model.hpp"

namespace anaconda::scenario {
namespace {

using bandit::Rng;
using bandit::StreamRole;

constexpr std::uint64_t kBanditStreams = 0xB4D17;
constexpr std::uint64_t kShuffleStreams = 0x5F0FF1E;

int agent_alpha(const Instance& inst, const AlgorithmSpec& algo, int i) {
  return algo.alpha ? *algo.alpha : inst.bandwidths[i];
}

std::vector<char> initial_active(const ScenarioConfig& c, int n) {
  std::vector<char> active(n, 1);
  std::vector<char> seen(n, 0);
  std::vector<Event> events = c.events;
  std::stable_sort(events.begin(), events.end(),
                   [](const Event& a, const Event& b) {
                     return a.round < b.round;
                   });
  for (const auto& e : events) {
    if (!seen[e.agent]) {
      seen[e.agent] = 1;
      if (e.join) active[e.agent] = 0;
    }
  }
  return active;
}

std::vector<int> restrict_to(const std::vector<int>& ids,
                             const std::vector<char>& active) {
  std::vector<int> out;
  for (int j : ids) {
    if (active[j]) out.push_back(j);
  }
  return out;
}

std::uint64_t trial_stream(const ScenarioConfig& c, int trial) {
  return Rng::derive(c.seed, {kBanditStreams, static_cast<std::uint64_t>(trial)})
      .key();
}

bench::SequentialTiming sequential_timing(const ScenarioConfig& c) {
  bench::SequentialTiming t;
  t.delays = c.delays;
  t.count_computation = c.sg_count_computation;
  t.bsg_extra_evals = c.bsg_extra_evals;
  return t;
}

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

// Population standard deviation.
double std_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean_of(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / v.size());
}

void finish_stats(TrialResult& r) {
  const auto& s = r.series;
  if (s.empty()) return;
  std::vector<double> pct;
  pct.reserve(s.size());
  for (const auto& row : s) pct.push_back(row.coverage_pct);
  r.mean_pct = mean_of(pct);
  r.std_pct = std_of(pct);
  const auto [lo, hi] = std::minmax_element(pct.begin(), pct.end());
  r.min_pct = *lo;
  r.max_pct = *hi;
  r.min_round = s[lo - pct.begin()].round;
  // minmax_element returns the last maximum; report the first.
  const auto first_max = std::max_element(pct.begin(), pct.end());
  r.max_round = s[first_max - pct.begin()].round;
  const std::size_t window = std::max<std::size_t>(1, s.size() / 4);
  r.last_quarter_mean_pct =
      std::accumulate(pct.end() - window, pct.end(), 0.0) / window;
}

class SeriesBuilder {
 public:
  SeriesBuilder(TrialResult& result, const objective::CoverageOracle& oracle)
      : result_(result), oracle_(oracle) {}

  void add(const coord::RoundRecord& record) {
    for (const auto& a : record.agents) sum_marginals_ += a.marginal;
    sum_f_ += record.f_value;
    result_.series.push_back(
        {record.round, record.sim_time_elapsed, record.f_value,
         oracle_.coverage_percent(record.f_value),
         sum_f_ > 0.0 ? sum_marginals_ / sum_f_ : 0.0});
  }

 private:
  TrialResult& result_;
  const objective::CoverageOracle& oracle_;
  double sum_marginals_ = 0.0;
  double sum_f_ = 0.0;
};

void audit_round(EvalAudit& audit, const coord::RoundRecord& record,
                 const std::vector<std::vector<int>>& allowed,
                 const std::vector<int>& alphas, bool count_evals) {
  ++audit.rounds;
  long messages = 0;
  for (const auto& a : record.agents) {
    ++audit.agent_rounds;
    messages += static_cast<long>(a.neighbors.size());
    if (static_cast<int>(a.neighbors.size()) > alphas[a.agent]) {
      ++audit.bandwidth_violations;
    }
    const auto& m = allowed[a.agent];
    for (int j : a.neighbors) {
      if (!std::binary_search(m.begin(), m.end(), j)) {
        ++audit.neighborhood_violations;
        break;
      }
    }
    if (count_evals) {
      audit.eval_calls += a.eval_calls;
      audit.eval_charged += a.eval_charged;
      if (a.eval_calls != a.eval_charged) ++audit.eval_mismatches;
    }
  }
  if (messages != record.messages) ++audit.bandwidth_violations;
  audit.messages += record.messages;
}

std::vector<int> shuffled(std::size_t n, Rng& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t k = n; k > 1; --k) {
    std::swap(order[k - 1], order[rng.below(k)]);
  }
  return order;
}

std::vector<int> effective_alphas(const Instance& inst,
                                  const AlgorithmSpec& algo,
                                  const std::vector<char>& active) {
  std::vector<int> alphas;
  for (int i = 0; i < inst.agent_count(); ++i) {
    if (!active[i]) continue;
    const int m = static_cast<int>(
        restrict_to(inst.neighborhoods[i], active).size());
    alphas.push_back(std::min(agent_alpha(inst, algo, i), m));
  }
  return alphas;
}

}  // namespace

void EvalAudit::merge(const EvalAudit& o) {
  rounds += o.rounds;
  agent_rounds += o.agent_rounds;
  eval_calls += o.eval_calls;
  eval_charged += o.eval_charged;
  eval_mismatches += o.eval_mismatches;
  bandwidth_violations += o.bandwidth_violations;
  neighborhood_violations += o.neighborhood_violations;
  messages += o.messages;
}

double per_round_time(const ScenarioConfig& c, const Instance& inst,
                      const AlgorithmSpec& algo) {
  switch (algo.kind) {
    case AlgorithmKind::kAnaconda: {
      const auto active = initial_active(c, inst.agent_count());
      return timing::anaconda_round_time(effective_alphas(inst, algo, active),
                                         c.delays);
    }
    case AlgorithmKind::kNearest:
    case AlgorithmKind::kRandom:
      return 2.0 * c.delays.tau_f + c.delays.tau_c;
    case AlgorithmKind::kDfsSg:
      return bench::dfs_sg_run(
                 inst.oracle,
                 bench::CommGraph::from_neighborhoods(inst.neighborhoods),
                 sequential_timing(c))
          .duration;
    case AlgorithmKind::kDfsBsg: {
      const auto graph =
          bench::CommGraph::from_neighborhoods(inst.neighborhoods);
      return bench::dfs_bsg_round_time(inst.oracle, bench::dfs_order(graph),
                                       sequential_timing(c));
    }
  }
  return 0.0;
}

long planned_rounds(const ScenarioConfig& c, const Instance& inst,
                    const AlgorithmSpec& algo) {
  if (algo.kind == AlgorithmKind::kDfsSg) return 1;
  if (c.rounds) return *c.rounds;
  return timing::budget_to_rounds(*c.budget_seconds,
                                  per_round_time(c, inst, algo));
}

bool bounds_feasible(const Instance& inst) {
  long long product = 1;
  for (int i = 0; i < inst.agent_count(); ++i) {
    product *= inst.oracle.action_count(i);
    if (product > analysis::kMaxJointAssignments) return false;
  }
  for (int i = 0; i < inst.agent_count(); ++i) {
    // Every subset of M_i is scanned once per distinct joint action.
    if (inst.neighborhoods[i].size() > 16) return false;
  }
  return inst.agent_count() <= 8;
}

TrialResult run_trial(const ScenarioConfig& c, const Instance& inst,
                      const AlgorithmSpec& algo, int trial,
                      const TrialHooks& hooks) {
  const int n = inst.agent_count();
  const auto& f = inst.oracle;
  TrialResult result;
  result.trial = trial;
  result.algorithm = algo.token;
  result.placement_rejections = inst.placement_rejections;
  SeriesBuilder series(result, f);
  coord::RoundClock clock{c.delays, 0.0};
  const std::uint64_t stream = trial_stream(c, trial);

  if (algo.sequential()) {
    const auto graph = bench::CommGraph::from_neighborhoods(inst.neighborhoods);
    const auto timing = sequential_timing(c);
    if (algo.kind == AlgorithmKind::kDfsSg) {
      const auto sg = bench::dfs_sg_run(f, graph, timing);
      coord::RoundRecord record;
      record.round = 1;
      record.actions = sg.assignment;
      record.f_value = sg.f_value;
      record.duration = sg.duration;
      record.sim_time_elapsed = sg.duration;
      record.messages = static_cast<long>(sg.order.hops.size());
      // Prefix marginals telescope to f; one entry carries the total.
      for (const auto& e : sg.assignment) {
        coord::AgentRound a;
        a.agent = e.agent;
        a.action = e.action;
        record.agents.push_back(a);
      }
      if (!record.agents.empty()) record.agents.front().marginal = sg.f_value;
      if (hooks.on_round) hooks.on_round(record);
      series.add(record);
      result.round_time = sg.duration;
      result.rounds_completed =
          !c.budget_seconds || sg.duration <= *c.budget_seconds + 1e-9 ? 1 : 0;
      result.final_neighborhoods = inst.neighborhoods;
      ++result.audit.rounds;
      finish_stats(result);
      return result;
    }
    const auto order = bench::dfs_order(graph);
    const double round_time = bench::dfs_bsg_round_time(f, order, timing);
    const long rounds = c.rounds ? *c.rounds
                                 : timing::budget_to_rounds(
                                       *c.budget_seconds, round_time);
    const int horizon = static_cast<int>(std::max<long>(1, rounds));
    std::vector<bench::BsgAgent> agents;
    agents.reserve(n);
    for (int i = 0; i < n; ++i) {
      agents.emplace_back(i, f.action_count(i), f.normalizer(i), horizon,
                          stream);
    }
    result.round_time = round_time;
    result.series.reserve(rounds);
    for (long t = 1; t <= rounds; ++t) {
      const auto record = bench::dfs_bsg_round(agents, f, order,
                                               static_cast<int>(t),
                                               round_time, clock);
      ++result.audit.rounds;
      result.audit.messages += record.messages;
      if (hooks.on_round) hooks.on_round(record);
      series.add(record);
    }
    result.rounds_completed = rounds;
    result.final_neighborhoods = inst.neighborhoods;
    finish_stats(result);
    return result;
  }

  // ANACONDA and the neighbor heuristics.
  std::vector<char> active = initial_active(c, n);
  std::vector<Event> events = c.events;
  std::stable_sort(events.begin(), events.end(),
                   [](const Event& a, const Event& b) {
                     return a.round < b.round;
                   });
  const bool is_anaconda = algo.kind == AlgorithmKind::kAnaconda;
  std::vector<int> alphas(n);
  for (int i = 0; i < n; ++i) alphas[i] = agent_alpha(inst, algo, i);

  result.round_time = per_round_time(c, inst, algo);
  const long rounds = planned_rounds(c, inst, algo);
  const int horizon = static_cast<int>(std::max<long>(1, rounds));

  auto make_agent = [&](int i) {
    return coord::AgentState(i, f.action_count(i),
                             restrict_to(inst.neighborhoods[i], active),
                             is_anaconda ? alphas[i] : 0, f.normalizer(i),
                             horizon, stream);
  };
  std::vector<coord::AgentState> agents;
  for (int i = 0; i < n; ++i) {
    if (active[i]) agents.push_back(make_agent(i));
  }

  std::vector<Rng> neighbor_rngs;
  for (int i = 0; i < n; ++i) {
    neighbor_rngs.push_back(Rng::derive(
        stream, {static_cast<std::uint64_t>(i),
                 static_cast<std::uint64_t>(StreamRole::kRandomNeighbors)}));
  }
  std::vector<objective::Point> positions = inst.world.camera_positions();
  auto nearest_for = [&](int i) {
    const auto candidates = restrict_to(inst.neighborhoods[i], active);
    return bench::nearest_neighbors(positions, i, candidates, alphas[i]);
  };
  std::vector<std::vector<int>> nearest(n);
  if (algo.kind == AlgorithmKind::kNearest) {
    for (int i = 0; i < n; ++i) nearest[i] = nearest_for(i);
  }

  const bool want_bounds =
      is_anaconda && c.bounds && c.events.empty() && bounds_feasible(inst);
  analysis::BoundAccumulator window;
  const long window_start = rounds - std::max<long>(1, rounds / 4) + 1;

  std::optional<Rng> shuffle_rng;
  if (hooks.shuffle_seed) {
    shuffle_rng = Rng::derive(*hooks.shuffle_seed, {kShuffleStreams});
  }

  std::size_t next_event = 0;
  result.series.reserve(rounds);
  for (long t = 1;; ++t) {
    bool changed = false;
    while (next_event < events.size() && events[next_event].round == t) {
      const Event& e = events[next_event++];
      if (static_cast<bool>(active[e.agent]) != e.join) {
        active[e.agent] = e.join ? 1 : 0;
        changed = true;
      }
    }
    if (changed) {
      std::vector<coord::AgentState> next;
      for (int i = 0; i < n; ++i) {
        if (!active[i]) continue;
        auto it = std::find_if(agents.begin(), agents.end(),
                               [i](const auto& a) { return a.id() == i; });
        if (it != agents.end()) {
          next.push_back(std::move(*it));
          next.back().reset_neighborhood(
              restrict_to(inst.neighborhoods[i], active));
        } else {
          next.push_back(make_agent(i));
        }
      }
      agents = std::move(next);
      if (algo.kind == AlgorithmKind::kNearest) {
        for (int i = 0; i < n; ++i) nearest[i] = nearest_for(i);
      }
    }
    if (c.budget_seconds) {
      if (events.empty()) {
        if (t > rounds) break;
      } else {
        const double next_time =
            is_anaconda ? timing::anaconda_round_time(
                              effective_alphas(inst, algo, active), c.delays)
                        : 2.0 * c.delays.tau_f + c.delays.tau_c;
        if (clock.elapsed + next_time > *c.budget_seconds + 1e-9) break;
      }
    } else if (t > rounds) {
      break;
    }
    if (agents.empty()) {
      throw InvalidArgument("no active agents at round " + std::to_string(t));
    }

    coord::RoundRecord record;
    if (is_anaconda) {
      std::vector<int> order;
      if (shuffle_rng) order = shuffled(agents.size(), *shuffle_rng);
      record = coord::anaconda_round(agents, f, static_cast<int>(t), clock,
                                     order);
    } else {
      std::vector<std::vector<int>> chosen;
      chosen.reserve(agents.size());
      for (const auto& a : agents) {
        const int i = a.id();
        chosen.push_back(algo.kind == AlgorithmKind::kNearest
                             ? nearest[i]
                             : bench::random_neighbors(
                                   restrict_to(inst.neighborhoods[i], active),
                                   alphas[i], neighbor_rngs[i]));
      }
      record = coord::actsel_round(agents, f, chosen, static_cast<int>(t),
                                   clock);
    }
    audit_round(result.audit, record, inst.neighborhoods, alphas, true);
    if (want_bounds && t >= window_start) window.add(record);
    if (hooks.on_round) hooks.on_round(record);
    series.add(record);
    result.rounds_completed = t;
    if (t == rounds || c.budget_seconds) {
      result.final_neighborhoods.assign(n, {});
      for (const auto& a : record.agents) {
        result.final_neighborhoods[a.agent] = a.neighbors;
      }
    }
  }

  if (want_bounds && window.rounds() > 0 && window.sum_f() > 0.0) {
    result.bounds = analysis::evaluate_bounds(window, f, inst.neighborhoods,
                                              alphas);
  }
  finish_stats(result);
  return result;
}

TrialResult run_trial(const ScenarioConfig& c, const std::string& algorithm,
                      int trial, const TrialHooks& hooks) {
  const Instance inst = build_instance(c, trial);
  return run_trial(c, inst, parse_algorithm(algorithm), trial, hooks);
}

AlgorithmSummary summarize(const std::string& algorithm,
                           const std::vector<TrialResult>& trials) {
  AlgorithmSummary s;
  s.algorithm = algorithm;
  s.trials = static_cast<int>(trials.size());
  if (trials.empty()) return s;
  std::vector<double> rounds_done;
  std::vector<double> round_times;
  s.rounds_completed_min = trials.front().rounds_completed;
  s.rounds_completed_max = trials.front().rounds_completed;
  std::size_t longest = 0;
  for (const auto& t : trials) {
    s.trial_mean_pct.push_back(t.mean_pct);
    s.trial_max_pct.push_back(t.max_pct);
    s.trial_last_quarter_pct.push_back(t.last_quarter_mean_pct);
    rounds_done.push_back(static_cast<double>(t.rounds_completed));
    round_times.push_back(t.round_time);
    s.rounds_completed_min = std::min(s.rounds_completed_min, t.rounds_completed);
    s.rounds_completed_max = std::max(s.rounds_completed_max, t.rounds_completed);
    s.placement_rejections += t.placement_rejections;
    s.audit.merge(t.audit);
    longest = std::max(longest, t.series.size());
  }
  s.mean_pct = mean_of(s.trial_mean_pct);
  s.std_over_trials = std_of(s.trial_mean_pct);
  s.last_quarter_mean_pct = mean_of(s.trial_last_quarter_pct);
  s.rounds_completed_mean = mean_of(rounds_done);
  s.round_time_mean = mean_of(round_times);

  std::vector<double> curve_pct;
  for (std::size_t k = 0; k < longest; ++k) {
    std::vector<double> pct;
    double time_sum = 0.0;
    for (const auto& t : trials) {
      if (k < t.series.size()) {
        pct.push_back(t.series[k].coverage_pct);
        time_sum += t.series[k].sim_time;
      }
    }
    CurvePoint p;
    p.round = static_cast<int>(k + 1);
    p.trials = static_cast<int>(pct.size());
    p.mean_sim_time = time_sum / pct.size();
    p.mean_pct = mean_of(pct);
    p.std_pct = std_of(pct);
    s.curve.push_back(p);
    curve_pct.push_back(p.mean_pct);
  }
  if (!curve_pct.empty()) {
    s.std_over_rounds = std_of(curve_pct);
    const auto lo = std::min_element(curve_pct.begin(), curve_pct.end());
    const auto hi = std::max_element(curve_pct.begin(), curve_pct.end());
    s.curve_min_pct = *lo;
    s.curve_min_round = static_cast<int>(lo - curve_pct.begin()) + 1;
    s.curve_max_pct = *hi;
    s.curve_max_round = static_cast<int>(hi - curve_pct.begin()) + 1;
  }

  BoundSummary b;
  for (const auto& t : trials) {
    if (!t.bounds) continue;
    const auto& r = *t.bounds;
    ++b.trials;
    b.kappa_f += r.kappa_f;
    b.kappa_i += r.kappa_i;
    b.rho += r.rho;
    b.beta_hat += r.beta_hat;
    b.f_opt += r.f_opt;
    b.apriori_lb += r.apriori_lb;
    b.aposteriori_lb += r.aposteriori_lb;
    b.asymptotic_lb += r.asymptotic_lb;
    b.empirical_mean_f += r.empirical_mean_f;
    b.apriori_holds += r.apriori_holds ? 1.0 : 0.0;
    b.aposteriori_holds += r.aposteriori_holds ? 1.0 : 0.0;
    b.asymptotic_holds += r.asymptotic_holds ? 1.0 : 0.0;
  }
  if (b.trials > 0) {
    for (double* field :
         {&b.kappa_f, &b.kappa_i, &b.rho, &b.beta_hat, &b.f_opt,
          &b.apriori_lb, &b.aposteriori_lb, &b.asymptotic_lb,
          &b.empirical_mean_f, &b.apriori_holds, &b.aposteriori_holds,
          &b.asymptotic_holds}) {
      *field /= b.trials;
    }
    s.bounds = b;
  }
  return s;
}

ExperimentResult run_experiment(const ScenarioConfig& config, int jobs) {
  validate(config);
  ExperimentResult out;
  out.config = config;
  const auto points = expand_sweep(config);
  struct Task {
    std::size_t point;
    int trial;
  };
  std::vector<Task> tasks;
  out.points.resize(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    const auto& pc = points[p].config;
    out.points[p].point = points[p];
    out.points[p].trials.assign(pc.algorithms.size(),
                                std::vector<TrialResult>(pc.trials));
    for (int t = 0; t < pc.trials; ++t) tasks.push_back({p, t});
  }

  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= tasks.size()) return;
      const Task& task = tasks[k];
      try {
        const auto& pc = points[task.point].config;
        const Instance inst = build_instance(pc, task.trial);
        const auto specs = pc.algorithm_specs();
        for (std::size_t a = 0; a < specs.size(); ++a) {
          out.points[task.point].trials[a][task.trial] =
              run_trial(pc, inst, specs[a], task.trial);
        }
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, tasks.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  // Report the first failure in task order so the error is deterministic.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& point : out.points) {
    const auto& algos = point.point.config.algorithms;
    for (std::size_t a = 0; a < algos.size(); ++a) {
      point.summaries.push_back(summarize(algos[a], point.trials[a]));
    }
  }
  return out;
}

}  // namespace anaconda::scenario
