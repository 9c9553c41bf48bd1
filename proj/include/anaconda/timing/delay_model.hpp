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

namespace anaconda::timing {

// Simulated cost of one oracle evaluation (tau_f) and of transmitting one
// action over one hop (tau_c), in seconds.
struct DelayModel {
  double tau_f = 0.0;
  double tau_c = 0.0;

  DelayModel() = default;
  DelayModel(double tau_f_seconds, double tau_c_seconds);

  bool zero() const { return tau_f == 0.0 && tau_c == 0.0; }
};

// tau_f (2 alpha + 3) + tau_c: one ANACONDA round of an agent listening to
// alpha neighbors.
double anaconda_round_time(int alpha, const DelayModel& model);
// Rounds are parallel phases, so the team round takes the slowest agent's
// time.
double anaconda_round_time(std::span<const int> alphas,
                           const DelayModel& model);

// Number of rounds to bring the convergence error within epsilon.
// NeiSel is uninvolved when alpha_bar = 0 or alpha_bar >= m_bar; then
// T = |V| N^2 / eps, else T = (alpha^2 |M| + |V|) N^2 / eps; rounded up.
std::int64_t convergence_rounds(double v_bar, double n, double alpha_bar,
                                double m_bar, double epsilon);

struct ConvergenceParams {
  double v_bar = 1.0;
  double n = 1.0;
  double alpha_bar = 0.0;
  double m_bar = 0.0;
  double epsilon = 1.0;
  // Sparse networks (|M| growing sublinearly in |N|): the alpha^2 |M| term
  // is dropped and the estimate is (tau_f alpha + tau_c) |V| N^2 / eps.
  bool sparse = false;
};

// Order-of-magnitude estimate of the time to converge, in seconds: the
// product of the round count and the per-round time.
double convergence_time(const ConvergenceParams& params,
                        const DelayModel& model);

// floor(budget / per_round). Throws InfiniteRoundsError if per_round is 0.
std::int64_t budget_to_rounds(double budget_seconds,
                              double per_round_seconds);

}  // namespace anaconda::timing
