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

#include "anaconda/coordination/round.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "anaconda/errors.hpp"

namespace anaconda::coord {
namespace {

using objective::Element;

std::vector<int> ascending(std::size_t n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

void check_order(std::span<const int> order, std::size_t n) {
  std::vector<char> seen(n, 0);
  if (order.size() != n) throw InvalidArgument("order must list every agent");
  for (int k : order) {
    if (k < 0 || static_cast<std::size_t>(k) >= n || seen[k]) {
      throw InvalidArgument("order is not a permutation");
    }
    seen[k] = 1;
  }
}

std::vector<int> distinct_sorted(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace

const AgentRound* RoundRecord::find(int agent) const {
  auto it = std::lower_bound(
      agents.begin(), agents.end(), agent,
      [](const AgentRound& r, int id) { return r.agent < id; });
  return it != agents.end() && it->agent == agent ? &*it : nullptr;
}

int actsel_draw(AgentState& agent) {
  return actsel_draw(agent, agent.streams().action);
}

int actsel_draw(AgentState& agent, bandit::Rng& rng) {
  return agent.action_bandit().sample(rng);
}

NeighborDraw neisel_draw(AgentState& agent) {
  NeighborDraw draw;
  const auto& m = agent.neighborhood();
  if (agent.bandwidth() == 0 || m.empty()) return draw;
  if (agent.bypass()) {
    draw.picks = m;
    draw.neighbors = m;
    return draw;
  }
  auto& bandits = agent.neighbor_bandits();
  auto& streams = agent.streams().slots;
  draw.picks.reserve(bandits.size());
  for (std::size_t k = 0; k < bandits.size(); ++k) {
    draw.picks.push_back(m[bandits[k].sample(streams[k])]);
  }
  draw.neighbors = distinct_sorted(draw.picks);
  return draw;
}

double actsel_feedback(AgentState& agent, const SubmodularOracle& f,
                       int own_action,
                       const JointAssignment& neighbor_actions) {
  if (neighbor_actions.contains(agent.id())) {
    throw InvalidArgument("agent " + std::to_string(agent.id()) +
                          " appears among its own neighbors");
  }
  std::vector<Element> buf(neighbor_actions.begin(), neighbor_actions.end());
  const double without = f.value(buf);
  buf.push_back({agent.id(), own_action});
  const double with = f.value(buf);
  const double marginal = with - without;
  agent.action_bandit().update(own_action, marginal / agent.normalizer());
  return marginal;
}

NeiselOutcome neisel_feedback(AgentState& agent, const SubmodularOracle& f,
                              int own_action, std::span<const int> picks,
                              const JointAssignment& picked_actions) {
  const Element own{agent.id(), own_action};
  NeiselOutcome out;
  out.slot_rewards.reserve(picks.size());

  std::vector<Element> prefix;  // distinct picked elements so far
  std::vector<Element> with_own;
  prefix.reserve(picks.size());
  with_own.reserve(picks.size() + 1);

  const Element solo[1] = {own};
  const double f_own = f.value(solo);
  double prev_voc = 0.0;
  const bool learn = !agent.bypass();
  const auto& m = agent.neighborhood();
  for (std::size_t k = 0; k < picks.size(); ++k) {
    const int j = picks[k];
    if (j == agent.id()) throw InvalidArgument("agent picked itself");
    const auto action = picked_actions.action_of(j);
    if (!action) {
      throw InvalidArgument("no action received from picked agent " +
                            std::to_string(j));
    }
    const Element e{j, *action};
    if (std::find(prefix.begin(), prefix.end(), e) == prefix.end()) {
      prefix.push_back(e);
    }
    with_own.assign(prefix.begin(), prefix.end());
    with_own.push_back(own);
    // VoC(a; P) = f(a) - f(a | P) = f(a) + f(P) - f(P + a).
    const double voc = f_own + f.value(prefix) - f.value(with_own);
    const double gain = voc - prev_voc;
    prev_voc = voc;
    const double reward = gain / agent.normalizer();
    out.slot_rewards.push_back(reward);
    if (learn) {
      const int arm = static_cast<int>(
          std::lower_bound(m.begin(), m.end(), j) - m.begin());
      agent.neighbor_bandits()[k].update(arm, reward);
    }
  }
  out.voc = prev_voc;
  return out;
}

int id_span(std::span<const AgentState> agents) {
  int top = -1;
  for (const auto& a : agents) top = std::max(top, a.id());
  return top + 1;
}

std::vector<JointAssignment> exchange(
    std::span<const AgentState> agents,
    std::span<const NeighborDraw> neighborhoods,
    std::span<const int> action_of) {
  std::vector<JointAssignment> inbox(agents.size());
  for (std::size_t k = 0; k < agents.size(); ++k) {
    for (int j : neighborhoods[k].neighbors) {
      if (j < 0 || static_cast<std::size_t>(j) >= action_of.size() ||
          action_of[j] < 0) {
        throw InvalidArgument("agent " + std::to_string(agents[k].id()) +
                              " listens to absent agent " +
                              std::to_string(j));
      }
      inbox[k].insert(j, action_of[j]);
    }
  }
  return inbox;
}

RoundRecord anaconda_round(std::vector<AgentState>& agents,
                           const SubmodularOracle& f, int t,
                           RoundClock& clock, std::span<const int> order) {
  const std::size_t n = agents.size();
  std::vector<int> default_order;
  if (order.empty()) {
    default_order = ascending(n);
    order = default_order;
  }
  check_order(order, n);

  // Phase 1: every agent draws an action and a neighborhood.
  Draws draws{std::vector<int>(n, 0), std::vector<NeighborDraw>(n)};
  for (int k : order) {
    draws.actions[k] = actsel_draw(agents[k]);
    draws.neighborhoods[k] = neisel_draw(agents[k]);
  }

  // Phase 2: one message per chosen edge.
  std::vector<int> action_of(id_span(agents), -1);
  for (std::size_t k = 0; k < n; ++k) {
    action_of[agents[k].id()] = draws.actions[k];
  }
  const auto inbox = exchange(agents, draws.neighborhoods, action_of);

  // Phase 3: feedback from local information only.
  RoundRecord record;
  record.round = t;
  record.agents.resize(n);
  std::vector<int> alphas(n, 0);
  for (int k : order) {
    AgentState& agent = agents[k];
    objective::CountingOracle counted(f);
    AgentRound& r = record.agents[k];
    r.agent = agent.id();
    r.action = draws.actions[k];
    r.picks = draws.neighborhoods[k].picks;
    r.neighbors = draws.neighborhoods[k].neighbors;
    r.marginal = actsel_feedback(agent, counted, r.action, inbox[k]);
    r.action_reward = r.marginal / agent.normalizer();
    NeiselOutcome nei =
        neisel_feedback(agent, counted, r.action, r.picks, inbox[k]);
    r.voc = nei.voc;
    r.slot_rewards = std::move(nei.slot_rewards);
    r.eval_calls = counted.calls();
    alphas[k] = agent.effective_bandwidth();
    r.eval_charged = 2L * alphas[k] + 3;
    record.messages += static_cast<long>(r.neighbors.size());
  }
  std::sort(record.agents.begin(), record.agents.end(),
            [](const AgentRound& a, const AgentRound& b) {
              return a.agent < b.agent;
            });
  for (const auto& r : record.agents) record.actions.insert(r.agent, r.action);
  record.f_value = f.eval(record.actions);
  record.duration = timing::anaconda_round_time(alphas, clock.delays);
  clock.elapsed += record.duration;
  record.sim_time_elapsed = clock.elapsed;
  return record;
}

RoundRecord actsel_round(std::vector<AgentState>& agents,
                         const SubmodularOracle& f,
                         std::span<const std::vector<int>> neighborhoods,
                         int t, RoundClock& clock) {
  const std::size_t n = agents.size();
  if (neighborhoods.size() != n) {
    throw InvalidArgument("one neighborhood per agent required");
  }
  std::vector<NeighborDraw> draws(n);
  std::vector<int> action_of(id_span(agents), -1);
  std::vector<int> actions(n);
  for (std::size_t k = 0; k < n; ++k) {
    actions[k] = actsel_draw(agents[k]);
    action_of[agents[k].id()] = actions[k];
    draws[k].picks = neighborhoods[k];
    draws[k].neighbors = distinct_sorted(neighborhoods[k]);
  }
  const auto inbox = exchange(agents, draws, action_of);

  RoundRecord record;
  record.round = t;
  record.agents.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    objective::CountingOracle counted(f);
    AgentRound& r = record.agents[k];
    r.agent = agents[k].id();
    r.action = actions[k];
    r.picks = std::move(draws[k].picks);
    r.neighbors = std::move(draws[k].neighbors);
    r.marginal = actsel_feedback(agents[k], counted, r.action, inbox[k]);
    r.action_reward = r.marginal / agents[k].normalizer();
    r.eval_calls = counted.calls();
    r.eval_charged = 2;
    record.messages += static_cast<long>(r.neighbors.size());
  }
  std::sort(record.agents.begin(), record.agents.end(),
            [](const AgentRound& a, const AgentRound& b) {
              return a.agent < b.agent;
            });
  for (const auto& r : record.agents) record.actions.insert(r.agent, r.action);
  record.f_value = f.eval(record.actions);
  record.duration = 2.0 * clock.delays.tau_f + clock.delays.tau_c;
  clock.elapsed += record.duration;
  record.sim_time_elapsed = clock.elapsed;
  return record;
}

}  // namespace anaconda::coord
