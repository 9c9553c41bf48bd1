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
#include <span>
#include <vector>

#include "anaconda/bandit/exp3.hpp"
#include "anaconda/bandit/rng.hpp"

namespace anaconda::coord {

// Random streams of one agent within one trial: one for its action bandit
// and one per neighbor-selection slot. Derived from (stream_seed, agent,
// role, slot), so the draws of an agent do not depend on any other agent.
struct AgentStreams {
  bandit::Rng action;
  std::vector<bandit::Rng> slots;
};

// One ANACONDA agent: an ActSel bandit over its actions and alpha stacked
// NeiSel bandits over its coordination neighborhood M_i.
//
// When alpha >= |M_i| the agent simply listens to all of M_i and holds no
// neighbor bandits (bypass mode). alpha = 0 also means no neighbor bandits.
class AgentState {
 public:
  AgentState(int agent_id, int action_count, std::vector<int> neighborhood,
             int bandwidth, double normalizer, int horizon,
             std::uint64_t stream_seed);

  int id() const { return id_; }
  int action_count() const { return action_bandit_.arm_count(); }
  int bandwidth() const { return bandwidth_; }
  double normalizer() const { return normalizer_; }
  int horizon() const { return horizon_; }
  // Sorted agent ids.
  const std::vector<int>& neighborhood() const { return neighborhood_; }
  bool bypass() const {
    return bandwidth_ >= static_cast<int>(neighborhood_.size());
  }
  // Neighbors actually listened to per round: min(alpha, |M_i|).
  int effective_bandwidth() const;

  bandit::Exp3& action_bandit() { return action_bandit_; }
  const bandit::Exp3& action_bandit() const { return action_bandit_; }
  std::vector<bandit::Exp3>& neighbor_bandits() { return neighbor_bandits_; }
  const std::vector<bandit::Exp3>& neighbor_bandits() const {
    return neighbor_bandits_;
  }
  AgentStreams& streams() { return streams_; }

  // Replaces M_i (agents joined or left). Arms for agents still present
  // keep their weights; new arms start at weight 1. Switching into or out of
  // bypass mode drops or creates the neighbor bandits.
  void reset_neighborhood(std::vector<int> neighborhood);

 private:
  int id_;
  int bandwidth_;
  double normalizer_;
  int horizon_;
  std::uint64_t stream_seed_;
  std::vector<int> neighborhood_;
  bandit::Exp3 action_bandit_;
  std::vector<bandit::Exp3> neighbor_bandits_;
  AgentStreams streams_;
};

}  // namespace anaconda::coord
