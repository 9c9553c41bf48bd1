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

#include "anaconda/benchmarks/heuristics.hpp"

#include <algorithm>

#include "anaconda/errors.hpp"

namespace anaconda::bench {

std::vector<int> nearest_neighbors(std::span<const objective::Point> positions,
                                   int agent, std::span<const int> candidates,
                                   int alpha) {
  if (alpha < 0) throw InvalidArgument("alpha must be >= 0");
  if (agent < 0 || agent >= static_cast<int>(positions.size())) {
    throw InvalidArgument("agent out of range");
  }
  std::vector<std::pair<double, int>> ranked;
  ranked.reserve(candidates.size());
  for (int j : candidates) {
    if (j < 0 || j >= static_cast<int>(positions.size())) {
      throw InvalidArgument("candidate out of range");
    }
    ranked.emplace_back(objective::distance(positions[agent], positions[j]),
                        j);
  }
  std::sort(ranked.begin(), ranked.end());
  const std::size_t keep =
      std::min(ranked.size(), static_cast<std::size_t>(alpha));
  std::vector<int> picked;
  for (std::size_t k = 0; k < keep; ++k) picked.push_back(ranked[k].second);
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::vector<int> random_neighbors(std::span<const int> candidates, int alpha,
                                  bandit::Rng& rng) {
  if (alpha < 0) throw InvalidArgument("alpha must be >= 0");
  std::vector<int> pool(candidates.begin(), candidates.end());
  const std::size_t keep =
      std::min(pool.size(), static_cast<std::size_t>(alpha));
  if (keep < pool.size()) {
    // Partial Fisher-Yates: the first `keep` slots become a uniform sample.
    for (std::size_t k = 0; k < keep; ++k) {
      const std::size_t pick = k + rng.below(pool.size() - k);
      std::swap(pool[k], pool[pick]);
    }
    pool.resize(keep);
  }
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace anaconda::bench
