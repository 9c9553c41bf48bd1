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
#include "anaconda/objective/coverage_world.hpp"

namespace anaconda::bench {

// The alpha members of candidates closest to positions[agent], ties to the
// lower id. Returned sorted by id.
std::vector<int> nearest_neighbors(std::span<const objective::Point> positions,
                                   int agent, std::span<const int> candidates,
                                   int alpha);

// alpha distinct members of candidates drawn uniformly without replacement
// (all of them when alpha >= |candidates|). Returned sorted by id.
std::vector<int> random_neighbors(std::span<const int> candidates, int alpha,
                                  bandit::Rng& rng);

}  // namespace anaconda::bench
