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

#include "anaconda/bandit/exp3.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <numeric>
#include <string>

#include "anaconda/errors.hpp"

namespace anaconda::bandit {

double Exp3::learning_rate_for(int arm_count, int horizon) {
  if (arm_count < 1) throw InvalidArgument("arm_count must be >= 1");
  if (horizon < 1) throw InvalidArgument("horizon must be >= 1");
  const double k = arm_count;
  return std::sqrt(2.0 * std::log(k) / (k * horizon));
}

Exp3::Exp3(int arm_count, int horizon)
    : weights_(arm_count > 0 ? static_cast<std::size_t>(arm_count) : 0, 1.0),
      eta_(learning_rate_for(arm_count, horizon)),
      horizon_(horizon) {}

Exp3::Exp3(std::vector<double> initial_weights, int horizon)
    : weights_(std::move(initial_weights)),
      eta_(learning_rate_for(static_cast<int>(weights_.size()), horizon)),
      horizon_(horizon) {
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw InvalidArgument("initial weights must be positive and finite");
    }
  }
}

ProbabilityVector Exp3::distribution() const {
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  ProbabilityVector p(weights_.size());
  for (std::size_t a = 0; a < weights_.size(); ++a) p[a] = weights_[a] / total;
  return p;
}

double Exp3::probability(int arm) const {
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  return weights_[arm] / total;
}

int Exp3::sample(Rng& rng) const {
  if (weights_.size() == 1) return 0;
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  const double u = rng.uniform01() * total;
  double running = 0.0;
  for (std::size_t a = 0; a < weights_.size(); ++a) {
    running += weights_[a];
    if (u < running) return static_cast<int>(a);
  }
  return static_cast<int>(weights_.size()) - 1;
}

void Exp3::update(int chosen_arm, double reward) {
  if (chosen_arm < 0 || chosen_arm >= arm_count()) {
    throw InvalidArgument("arm " + std::to_string(chosen_arm) +
                          " out of range");
  }
  if (!(reward >= 0.0 && reward <= 1.0)) {
    if (!(reward >= -1e-9 && reward <= 1.0 + 1e-9)) {
      std::cerr << "warning: exp3 reward " << reward
                << " outside [0, 1], clamped\n";
    }
    reward = std::isnan(reward) ? 0.0 : std::clamp(reward, 0.0, 1.0);
  }
  const double p = probability(chosen_arm);
  weights_[chosen_arm] *= std::exp(-eta_ * (1.0 - reward) / p);
  const double top = *std::max_element(weights_.begin(), weights_.end());
  if (top != 1.0) {
    for (double& w : weights_) w /= top;
  }
  for (double& w : weights_) {
    w = std::max(w, std::numeric_limits<double>::min());
  }
}

}  // namespace anaconda::bandit
