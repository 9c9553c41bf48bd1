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
#include <vector>

#include "anaconda/bandit/exp3.hpp"
#include "anaconda/bandit/rng.hpp"
#include "anaconda/benchmarks/comm_graph.hpp"
#include "anaconda/coordination/round.hpp"
#include "anaconda/objective/joint_assignment.hpp"
#include "anaconda/objective/oracle.hpp"
#include "anaconda/timing/delay_model.hpp"

namespace anaconda::bench {

struct SequentialTiming {
  timing::DelayModel delays;
  // DFS-SG: charge |V_i| evaluations per agent on top of communication.
  bool count_computation = true;
  // DFS-BSG: each round charges tau_f * (max_i |V_i| + bsg_extra_evals).
  int bsg_extra_evals = 2;
};

struct SgResult {
  objective::JointAssignment assignment;
  double f_value = 0.0;
  DfsOrder order;
  double duration = 0.0;
};

// Full-information sequential greedy along the DFS order: agent pi(k) takes
// argmax_a f(a | actions of pi(1..k-1)), ties to the lowest action index.
SgResult dfs_sg_run(const objective::SubmodularOracle& f,
                    const CommGraph& graph,
                    const SequentialTiming& timing = {});

// Bandit agent of DFS-BSG: one Exp3 over its own actions.
struct BsgAgent {
  int id = 0;
  bandit::Exp3 bandit;
  double normalizer = 1.0;
  bandit::Rng rng;

  BsgAgent(int agent_id, int action_count, double normalizer, int horizon,
           std::uint64_t stream_seed);
};

// Per-round simulated time of DFS-BSG: computation
// tau_f * (max |V_i| + extra) plus the sequential message time along the
// order.
double dfs_bsg_round_time(const objective::SubmodularOracle& f,
                          const DfsOrder& order,
                          const SequentialTiming& timing);

// One DFS-BSG round: every agent draws from its bandit; agent pi(k) is
// rewarded f(a | actions of pi(1..k-1)) / B. agents[i] must have id i.
coord::RoundRecord dfs_bsg_round(std::vector<BsgAgent>& agents,
                                 const objective::SubmodularOracle& f,
                                 const DfsOrder& order, int t,
                                 double round_time, coord::RoundClock& clock);

}  // namespace anaconda::bench
