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

#include "anaconda/benchmarks/sequential_greedy.hpp"

#include <algorithm>
#include <string>

#include "anaconda/bandit/rng.hpp"
#include "anaconda/errors.hpp"

namespace anaconda::bench {

using objective::Element;

namespace {

void check_order_covers(const DfsOrder& order, int agent_count) {
  if (static_cast<int>(order.order.size()) != agent_count) {
    throw InvalidArgument("order must visit all " +
                          std::to_string(agent_count) + " agents");
  }
}

}  // namespace

SgResult dfs_sg_run(const objective::SubmodularOracle& f,
                    const CommGraph& graph, const SequentialTiming& timing) {
  if (graph.node_count() != f.agent_count()) {
    throw InvalidArgument("graph and oracle disagree on the agent count");
  }
  SgResult result;
  result.order = dfs_order(graph, 0);
  std::vector<Element> prefix;
  double prefix_value = 0.0;
  long evaluations = 0;
  for (int agent : result.order.order) {
    int best = 0;
    double best_gain = -1.0;
    double best_value = prefix_value;
    prefix.push_back({agent, 0});
    for (int a = 0; a < f.action_count(agent); ++a) {
      prefix.back().action = a;
      const double value = f.value(prefix);
      ++evaluations;
      const double gain = value - prefix_value;
      if (gain > best_gain) {
        best_gain = gain;
        best = a;
        best_value = value;
      }
    }
    prefix.back().action = best;
    prefix_value = best_value;
    result.assignment.insert(agent, best);
  }
  result.f_value = f.eval(result.assignment);
  result.duration = sequential_comm_time(result.order, timing.delays.tau_c);
  if (timing.count_computation) {
    result.duration += timing.delays.tau_f * static_cast<double>(evaluations);
  }
  return result;
}

BsgAgent::BsgAgent(int agent_id, int action_count, double normalizer_value,
                   int horizon, std::uint64_t stream_seed)
    : id(agent_id),
      bandit(action_count, horizon),
      normalizer(normalizer_value),
      rng(bandit::Rng::derive(
          stream_seed,
          {static_cast<std::uint64_t>(agent_id),
           static_cast<std::uint64_t>(
               bandit::StreamRole::kSequentialAction)})) {
  if (!(normalizer > 0.0)) throw InvalidArgument("normalizer must be > 0");
}

double dfs_bsg_round_time(const objective::SubmodularOracle& f,
                          const DfsOrder& order,
                          const SequentialTiming& timing) {
  int max_actions = 0;
  for (int i = 0; i < f.agent_count(); ++i) {
    max_actions = std::max(max_actions, f.action_count(i));
  }
  return timing.delays.tau_f * (max_actions + timing.bsg_extra_evals) +
         sequential_comm_time(order, timing.delays.tau_c);
}

coord::RoundRecord dfs_bsg_round(std::vector<BsgAgent>& agents,
                                 const objective::SubmodularOracle& f,
                                 const DfsOrder& order, int t,
                                 double round_time,
                                 coord::RoundClock& clock) {
  const int n = static_cast<int>(agents.size());
  check_order_covers(order, n);
  std::vector<int> actions(n);
  for (int i = 0; i < n; ++i) {
    if (agents[i].id != i) throw InvalidArgument("agents[i] must have id i");
    actions[i] = agents[i].bandit.sample(agents[i].rng);
  }

  coord::RoundRecord record;
  record.round = t;
  record.agents.resize(n);
  std::vector<Element> prefix;
  prefix.reserve(n);
  double prefix_value = 0.0;
  std::vector<int> earlier;
  for (int agent : order.order) {
    coord::AgentRound& r = record.agents[agent];
    r.agent = agent;
    r.action = actions[agent];
    r.neighbors = earlier;
    std::sort(r.neighbors.begin(), r.neighbors.end());
    prefix.push_back({agent, actions[agent]});
    const double value = f.value(prefix);
    r.marginal = value - prefix_value;
    prefix_value = value;
    r.action_reward = r.marginal / agents[agent].normalizer;
    agents[agent].bandit.update(r.action, r.action_reward);
    earlier.push_back(agent);
  }
  for (const auto& r : record.agents) record.actions.insert(r.agent, r.action);
  record.f_value = f.eval(record.actions);
  record.messages = static_cast<long>(order.hops.size());
  record.duration = round_time;
  clock.elapsed += round_time;
  record.sim_time_elapsed = clock.elapsed;
  return record;
}

}  // namespace anaconda::bench
