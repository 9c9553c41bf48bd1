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

#include "anaconda/coordination/agent.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "anaconda/errors.hpp"

namespace anaconda::coord {
namespace {

std::vector<int> sorted_unique(std::vector<int> ids, int self) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int j : ids) {
    if (j == self) {
      throw InvalidArgument("agent " + std::to_string(self) +
                            " cannot be its own neighbor");
    }
    if (j < 0) throw InvalidArgument("negative neighbor id");
  }
  return ids;
}

}  // namespace

AgentState::AgentState(int agent_id, int action_count,
                       std::vector<int> neighborhood, int bandwidth,
                       double normalizer, int horizon,
                       std::uint64_t stream_seed)
    : id_(agent_id),
      bandwidth_(bandwidth),
      normalizer_(normalizer),
      horizon_(horizon),
      stream_seed_(stream_seed),
      neighborhood_(sorted_unique(std::move(neighborhood), agent_id)),
      action_bandit_(action_count, horizon) {
  if (bandwidth < 0) throw InvalidArgument("bandwidth must be >= 0");
  if (!(normalizer > 0.0)) throw InvalidArgument("normalizer must be > 0");
  const auto id = static_cast<std::uint64_t>(agent_id);
  streams_.action = bandit::Rng::derive(
      stream_seed_,
      {id, static_cast<std::uint64_t>(bandit::StreamRole::kAction)});
  reset_neighborhood(neighborhood_);
}

int AgentState::effective_bandwidth() const {
  return std::min(bandwidth_, static_cast<int>(neighborhood_.size()));
}

void AgentState::reset_neighborhood(std::vector<int> neighborhood) {
  std::vector<int> next = sorted_unique(std::move(neighborhood), id_);
  const bool next_bypass = bandwidth_ >= static_cast<int>(next.size());
  std::vector<bandit::Exp3> bandits;
  if (!next_bypass) {
    bandits.reserve(bandwidth_);
    for (int k = 0; k < bandwidth_; ++k) {
      std::vector<double> weights(next.size(), 1.0);
      if (k < static_cast<int>(neighbor_bandits_.size())) {
        const auto old = neighbor_bandits_[k].weights();
        for (std::size_t a = 0; a < next.size(); ++a) {
          auto it = std::lower_bound(neighborhood_.begin(),
                                     neighborhood_.end(), next[a]);
          if (it != neighborhood_.end() && *it == next[a]) {
            weights[a] = old[it - neighborhood_.begin()];
          }
        }
      }
      bandits.emplace_back(std::move(weights), horizon_);
    }
  }
  neighborhood_ = std::move(next);
  neighbor_bandits_ = std::move(bandits);

  const auto id = static_cast<std::uint64_t>(id_);
  while (streams_.slots.size() < neighbor_bandits_.size()) {
    const auto k = static_cast<std::uint64_t>(streams_.slots.size());
    streams_.slots.push_back(bandit::Rng::derive(
        stream_seed_,
        {id, static_cast<std::uint64_t>(bandit::StreamRole::kNeighborSlot),
         k}));
  }
}

}  // namespace anaconda::coord
