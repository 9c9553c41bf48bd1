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

namespace anaconda::bandit {

using ProbabilityVector = std::vector<double>;

// Exp3 with the loss-based importance-weighted estimator:
//   rhat_a = 1 - 1(a = chosen) (1 - r) / p_a,   w_a <- w_a exp(eta rhat_a),
// with eta = sqrt(2 ln K / (K T)).
//
// All unchosen arms share the factor exp(eta), so the update is applied as
// a single factor exp(-eta (1 - r) / p) on the chosen arm; weights are then
// rescaled so the largest is 1. The sampling distribution is the same as
// with the literal update, and a reward of 1 leaves the weights untouched.
class Exp3 {
 public:
  Exp3(int arm_count, int horizon);
  // Starts from the given positive weights instead of all ones.
  Exp3(std::vector<double> initial_weights, int horizon);

  static double learning_rate_for(int arm_count, int horizon);

  int arm_count() const { return static_cast<int>(weights_.size()); }
  int horizon() const { return horizon_; }
  double learning_rate() const { return eta_; }
  std::span<const double> weights() const { return weights_; }

  ProbabilityVector distribution() const;
  double probability(int arm) const;
  int sample(Rng& rng) const;

  // Reward outside [0, 1] is clamped; a warning is logged if it is off by
  // more than rounding noise.
  void update(int chosen_arm, double reward);

 private:
  std::vector<double> weights_;
  double eta_ = 0.0;
  int horizon_ = 1;
};

}  // namespace anaconda::bandit
