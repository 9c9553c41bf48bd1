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

#include "anaconda/analysis/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "anaconda/errors.hpp"
#include "anaconda/objective/set_function.hpp"

namespace anaconda::analysis {

double rho(double kappa, int alpha) {
  if (alpha < 1) throw InvalidArgument("rho needs alpha >= 1");
  if (!(kappa >= 0.0 && kappa <= 1.0)) {
    throw InvalidArgument("rho needs kappa in [0, 1]");
  }
  if (kappa < 1e-12) return 1.0;
  // log1p keeps (1 - kappa/alpha)^alpha accurate for large alpha.
  const double tail = std::exp(alpha * std::log1p(-kappa / alpha));
  return (1.0 - tail) / kappa;
}

double compute_beta(std::span<const coord::RoundRecord> history) {
  double numerator = 0.0;
  double denominator = 0.0;
  for (const auto& record : history) {
    for (const auto& agent : record.agents) numerator += agent.marginal;
    denominator += record.f_value;
  }
  if (!(denominator > 0.0)) {
    throw UndefinedBetaError("beta is undefined: every f(A_t) is zero");
  }
  return std::max(0.0, numerator / denominator);
}

VocCurvature voc_curvature(const SubmodularOracle& f, int agent, int action,
                           std::span<const Element> neighbor_actions) {
  const int n = static_cast<int>(neighbor_actions.size());
  if (n > 63) throw CapacityError("voc_curvature limited to 63 neighbors");
  const Element own{agent, action};
  const double f_own = f.value(std::span<const Element>(&own, 1));
  std::vector<Element> subset;
  auto voc_of = [&](std::uint64_t mask) {
    subset.clear();
    for (int k = 0; k < n; ++k) {
      if ((mask >> k) & 1U) subset.push_back(neighbor_actions[k]);
    }
    const double without = f.value(subset);
    subset.push_back(own);
    return f_own + without - f.value(subset);
  };
  VocCurvature out;
  out.value = objective::curvature_of(n, voc_of, &out.degenerate);
  return out;
}

OptResult brute_force_opt(const SubmodularOracle& f) {
  const int n = f.agent_count();
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= f.action_count(i);
    if (total > kMaxJointAssignments) {
      throw CapacityError("brute_force_opt: more than " +
                          std::to_string(kMaxJointAssignments) +
                          " joint assignments");
    }
  }
  std::vector<Element> current(n);
  for (int i = 0; i < n; ++i) current[i] = {i, 0};
  OptResult best;
  std::vector<int> best_actions(n, 0);
  double best_value = -1.0;
  for (long long k = 0; k < total; ++k) {
    const double value = f.value(current);
    ++best.evaluated;
    // Odometer order with the last agent fastest is lexicographic, so a
    // strict improvement test keeps the smallest maximizer.
    if (value > best_value) {
      best_value = value;
      for (int i = 0; i < n; ++i) best_actions[i] = current[i].action;
    }
    for (int i = n - 1; i >= 0; --i) {
      if (++current[i].action < f.action_count(i)) break;
      current[i].action = 0;
    }
  }
  for (int i = 0; i < n; ++i) best.assignment.insert(i, best_actions[i]);
  best.f_opt = std::max(0.0, best_value);
  return best;
}

NeighborhoodResult brute_force_neighborhood(
    const SubmodularOracle& f, int agent,
    std::span<const JointAssignment> trace, std::span<const int> candidates,
    int alpha, std::span<const double> weights) {
  if (alpha < 0) throw InvalidArgument("alpha must be >= 0");
  if (!weights.empty() && weights.size() != trace.size()) {
    throw InvalidArgument("one weight per trace entry required");
  }
  std::vector<int> pool(candidates.begin(), candidates.end());
  std::sort(pool.begin(), pool.end());
  const int m = static_cast<int>(pool.size());
  const int cap = std::min(alpha, m);
  long long subsets = 0;
  {
    long double binom = 1.0L;
    for (int k = 0; k <= cap; ++k) {
      if (k > 0) binom = binom * (m - k + 1) / k;
      subsets += static_cast<long long>(binom + 0.5L);
      if (subsets > kMaxNeighborhoods) {
        throw CapacityError("brute_force_neighborhood: more than " +
                            std::to_string(kMaxNeighborhoods) + " subsets");
      }
    }
  }

  // Per-round own element and f(a), shared by every candidate subset.
  struct Step {
    Element own;
    double f_own;
    double weight;
    const JointAssignment* actions;
  };
  std::vector<Step> steps;
  steps.reserve(trace.size());
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const auto action = trace[t].action_of(agent);
    if (!action) {
      throw InvalidArgument("trace entry without the agent's action");
    }
    const Element own{agent, *action};
    steps.push_back({own, f.value(std::span<const Element>(&own, 1)),
                     weights.empty() ? 1.0 : weights[t], &trace[t]});
  }

  std::vector<Element> buf;
  auto total_voc = [&](const std::vector<int>& chosen) {
    double sum = 0.0;
    for (const Step& s : steps) {
      buf.clear();
      for (int j : chosen) {
        const auto a = s.actions->action_of(j);
        if (!a) throw InvalidArgument("trace entry without a neighbor action");
        buf.push_back({j, *a});
      }
      const double without = f.value(buf);
      buf.push_back(s.own);
      sum += s.weight * (s.f_own + without - f.value(buf));
    }
    return sum;
  };

  // Sets in lexicographic order of their sorted id lists: depth-first over
  // "append a larger id".
  NeighborhoodResult best;
  best.total_voc = total_voc({});
  std::vector<int> chosen_idx;
  std::vector<int> chosen;
  const double tol = 1e-9;
  auto consider = [&]() {
    const double value = total_voc(chosen);
    const double scale = std::max(1.0, std::abs(best.total_voc));
    if (value > best.total_voc + tol * scale ||
        (value >= best.total_voc - tol * scale &&
         chosen.size() > best.neighbors.size())) {
      best.total_voc = value;
      best.neighbors = chosen;
    }
  };
  std::vector<int> next{0};
  while (!next.empty()) {
    int& k = next.back();
    if (k >= m || static_cast<int>(chosen.size()) >= cap) {
      next.pop_back();
      if (!chosen.empty()) {
        chosen.pop_back();
        chosen_idx.pop_back();
      }
      continue;
    }
    chosen_idx.push_back(k);
    chosen.push_back(pool[k]);
    ++k;
    consider();
    next.push_back(chosen_idx.back() + 1);
  }
  return best;
}

void BoundAccumulator::add(const coord::RoundRecord& record) {
  ++rounds_;
  sum_f_ += record.f_value;
  std::vector<int> actions;
  actions.reserve(record.agents.size());
  for (const auto& agent : record.agents) {
    sum_marginals_ += agent.marginal;
    if (agent.agent != static_cast<int>(actions.size())) {
      throw InvalidArgument("bound accumulation needs agents 0..n-1");
    }
    actions.push_back(agent.action);
  }
  ++profiles_[actions];
}

std::vector<Element> full_ground_set(const SubmodularOracle& f) {
  std::vector<Element> ground;
  for (int i = 0; i < f.agent_count(); ++i) {
    for (int a = 0; a < f.action_count(i); ++a) ground.push_back({i, a});
  }
  return ground;
}

BoundReport evaluate_bounds(const BoundAccumulator& window,
                            const SubmodularOracle& f,
                            const std::vector<std::vector<int>>& neighborhoods,
                            std::span<const int> bandwidths,
                            const BoundOptions& options) {
  const int n = f.agent_count();
  if (static_cast<int>(neighborhoods.size()) != n ||
      static_cast<int>(bandwidths.size()) != n) {
    throw InvalidArgument("one neighborhood and bandwidth per agent");
  }
  if (window.rounds() == 0) throw InvalidArgument("empty evaluation window");
  BoundReport report;
  report.window_rounds = window.rounds();
  report.empirical_mean_f = window.mean_f();
  report.f_opt = brute_force_opt(f).f_opt;
  report.slack = options.slack_fraction * report.f_opt;

  const auto ground = full_ground_set(f);
  try {
    report.kappa_f = objective::curvature(f, ground);
  } catch (const DegenerateFunctionError&) {
    report.kappa_f = 0.0;
  }
  if (!(window.sum_f() > 0.0)) {
    throw UndefinedBetaError("beta is undefined: every f(A_t) is zero");
  }
  report.beta_hat = std::max(0.0, window.sum_marginals() / window.sum_f());

  const double k = report.kappa_f;
  report.aposteriori_lb = 1.0 / (1.0 + report.beta_hat * k);
  report.asymptotic_lb = std::max(1.0 - k, report.aposteriori_lb);
  report.apriori_lb = 1.0 - k;

  if (options.apriori) {
    std::vector<JointAssignment> trace;
    std::vector<double> weights;
    for (const auto& [actions, count] : window.profiles()) {
      JointAssignment a;
      for (int i = 0; i < static_cast<int>(actions.size()); ++i) {
        a.insert(i, actions[i]);
      }
      trace.push_back(std::move(a));
      weights.push_back(static_cast<double>(count) / window.rounds());
    }
    int alpha_max = 0;
    double kappa_i = 0.0;
    double voc_sum = 0.0;
    std::vector<Element> neighbor_elems;
    for (int i = 0; i < n; ++i) {
      alpha_max = std::max(alpha_max, bandwidths[i]);
      for (const auto& profile : trace) {
        neighbor_elems.clear();
        for (int j : neighborhoods[i]) {
          neighbor_elems.push_back({j, *profile.action_of(j)});
        }
        kappa_i = std::max(
            kappa_i,
            voc_curvature(f, i, *profile.action_of(i), neighbor_elems).value);
      }
      voc_sum += brute_force_neighborhood(f, i, trace, neighborhoods[i],
                                          bandwidths[i], weights)
                     .total_voc;
    }
    report.kappa_i = kappa_i;
    report.optimal_voc_sum = voc_sum;
    report.rho = alpha_max >= 1 ? rho(kappa_i, alpha_max) : 1.0;
    if (report.f_opt > 0.0) {
      report.apriori_lb +=
          k * (1.0 - k) * report.rho * voc_sum / report.f_opt;
    }
  }

  const double target = report.empirical_mean_f + report.slack;
  report.apriori_holds = target >= report.apriori_lb * report.f_opt;
  report.aposteriori_holds = target >= report.aposteriori_lb * report.f_opt;
  report.asymptotic_holds = target >= report.asymptotic_lb * report.f_opt;
  return report;
}

}  // namespace anaconda::analysis
