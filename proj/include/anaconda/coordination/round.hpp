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

#include <span>
#include <vector>

#include "anaconda/bandit/rng.hpp"
#include "anaconda/coordination/agent.hpp"
#include "anaconda/objective/joint_assignment.hpp"
#include "anaconda/objective/oracle.hpp"
#include "anaconda/timing/delay_model.hpp"

namespace anaconda::coord {

using objective::JointAssignment;
using objective::SubmodularOracle;

// What one agent did in one round.
struct AgentRound {
  int agent = 0;
  int action = 0;
  // NeiSel picks in slot order (may repeat); in bypass mode, M_i.
  std::vector<int> picks;
  // N_{i,t}: distinct picks, sorted.
  std::vector<int> neighbors;
  // f(a_i | neighbors' actions) and VoC(a_i; neighbors).
  double marginal = 0.0;
  double voc = 0.0;
  double action_reward = 0.0;
  std::vector<double> slot_rewards;
  // Oracle calls this agent made during the round.
  long eval_calls = 0;
  // Evaluations charged by the per-round time model.
  long eval_charged = 0;
};

struct RoundRecord {
  int round = 0;
  JointAssignment actions;
  std::vector<AgentRound> agents;  // sorted by agent id
  double f_value = 0.0;
  // One message per listened edge, each carrying one action.
  long messages = 0;
  double duration = 0.0;
  double sim_time_elapsed = 0.0;  // end of this round

  const AgentRound* find(int agent) const;
};

// Simulated clock shared by the rounds of one trial.
struct RoundClock {
  timing::DelayModel delays;
  double elapsed = 0.0;
};

// ActSel: draw from the action bandit with the agent's own stream.
int actsel_draw(AgentState& agent);
int actsel_draw(AgentState& agent, bandit::Rng& rng);

struct NeighborDraw {
  std::vector<int> picks;
  std::vector<int> neighbors;
};

// NeiSel: slot k draws from the k-th neighbor bandit with the slot's own
// stream. Bypass mode returns M_i without sampling; alpha = 0 returns
// nothing.
NeighborDraw neisel_draw(AgentState& agent);

// reward = f(a | neighbor_actions) / B_i, fed to the action bandit. Makes
// 2 oracle calls. Returns the unnormalized marginal.
double actsel_feedback(AgentState& agent, const SubmodularOracle& f,
                       int own_action,
                       const JointAssignment& neighbor_actions);

struct NeiselOutcome {
  double voc = 0.0;  // VoC of the whole pick list
  std::vector<double> slot_rewards;
};

// Slot k earns [VoC(a; picks 1..k) - VoC(a; picks 1..k-1)] / B_i; a repeat
// of an earlier pick earns 0. Makes 1 + 2 * picks.size() oracle calls; in
// bypass mode the chain is evaluated but no bandit is updated.
NeiselOutcome neisel_feedback(AgentState& agent, const SubmodularOracle& f,
                              int own_action, std::span<const int> picks,
                              const JointAssignment& picked_actions);

// One draw of every agent before any exchange.
struct Draws {
  std::vector<int> actions;               // indexed like agents
  std::vector<NeighborDraw> neighborhoods;  // indexed like agents
};

// Message exchange: agent i receives exactly the actions of its chosen
// neighbors. action_of[id] is the action currently broadcast by agent id
// (-1 for absent agents); nothing else of it is read.
std::vector<JointAssignment> exchange(
    std::span<const AgentState> agents,
    std::span<const NeighborDraw> neighborhoods,
    std::span<const int> action_of);

// One synchronous ANACONDA round: all draws, then the exchange, then all
// feedback. Agents are visited in order (indices into agents, default
// ascending) inside each phase; the result does not depend on it. The clock
// advances by max_i tau_f (2 alpha_eff + 3) + tau_c.
RoundRecord anaconda_round(std::vector<AgentState>& agents,
                           const SubmodularOracle& f, int t,
                           RoundClock& clock,
                           std::span<const int> order = {});

// A round where neighborhoods are supplied (nearest/random heuristics): the
// agents run ActSel only. neighborhoods[k] belongs to agents[k]. The clock
// advances by 2 tau_f + tau_c.
RoundRecord actsel_round(std::vector<AgentState>& agents,
                         const SubmodularOracle& f,
                         std::span<const std::vector<int>> neighborhoods,
                         int t, RoundClock& clock);

// Largest agent id + 1 (size of an action_of table).
int id_span(std::span<const AgentState> agents);

}  // namespace anaconda::coord
