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

#include <map>
#include <span>
#include <vector>

#include "anaconda/coordination/round.hpp"
#include "anaconda/objective/joint_assignment.hpp"
#include "anaconda/objective/oracle.hpp"

namespace anaconda::analysis {

using objective::Element;
using objective::JointAssignment;
using objective::SubmodularOracle;

// kappa^{-1} [1 - (1 - kappa / alpha)^alpha], with the kappa -> 0 limit 1.
double rho(double kappa, int alpha);

// sum_t sum_i f(a_i | neighbors) / sum_t f(A_t). Throws UndefinedBetaError
// if every f(A_t) is zero.
double compute_beta(std::span<const coord::RoundRecord> history);

struct VocCurvature {
  double value = 0.0;
  bool degenerate = false;
};

// Curvature of N -> VoC(a; N) over the ground set of neighbor elements.
// Neighbors whose singleton VoC is zero are skipped; if all are, the result
// is 0 with `degenerate` set.
VocCurvature voc_curvature(const SubmodularOracle& f, int agent, int action,
                           std::span<const Element> neighbor_actions);

struct OptResult {
  JointAssignment assignment;
  double f_opt = 0.0;
  long long evaluated = 0;
};

inline constexpr long long kMaxJointAssignments = 10'000'000;

// Exhaustive maximizer of f over joint assignments of all agents; ties go
// to the lexicographically smallest action vector. CapacityError if the
// product of action counts exceeds kMaxJointAssignments.
OptResult brute_force_opt(const SubmodularOracle& f);

inline constexpr long long kMaxNeighborhoods = 1'000'000;

struct NeighborhoodResult {
  std::vector<int> neighbors;  // sorted
  double total_voc = 0.0;
};

// argmax over N in M_i with |N| <= alpha of sum_t w_t VoC(a_{i,t}; N) where
// trace[t] holds every agent's action at round t (weights default to 1).
// Among maximizers the largest, then lexicographically smallest, set wins.
NeighborhoodResult brute_force_neighborhood(
    const SubmodularOracle& f, int agent,
    std::span<const JointAssignment> trace, std::span<const int> candidates,
    int alpha, std::span<const double> weights = {});

// Compact record of the rounds inside the evaluation window: running sums
// for f and the marginals, plus how often each joint action occurred.
class BoundAccumulator {
 public:
  void add(const coord::RoundRecord& record);

  long rounds() const { return rounds_; }
  double sum_f() const { return sum_f_; }
  double sum_marginals() const { return sum_marginals_; }
  double mean_f() const { return rounds_ ? sum_f_ / rounds_ : 0.0; }
  const std::map<std::vector<int>, long>& profiles() const {
    return profiles_;
  }

 private:
  long rounds_ = 0;
  double sum_f_ = 0.0;
  double sum_marginals_ = 0.0;
  std::map<std::vector<int>, long> profiles_;
};

struct BoundOptions {
  double slack_fraction = 0.05;
  // Compute kappa_I and the optimal-neighborhood VoC term of the a priori
  // bound (brute force over subsets of every M_i).
  bool apriori = true;
};

// All ratios are relative to f_opt.
struct BoundReport {
  double kappa_f = 0.0;
  double kappa_i = 0.0;
  double rho = 1.0;
  double beta_hat = 0.0;
  double f_opt = 0.0;
  double apriori_lb = 0.0;
  double aposteriori_lb = 0.0;
  double asymptotic_lb = 0.0;
  double empirical_mean_f = 0.0;
  double slack = 0.0;
  // sum_i E[VoC(a_i; N*_i)] over the window.
  double optimal_voc_sum = 0.0;
  long window_rounds = 0;
  bool apriori_holds = true;
  bool aposteriori_holds = true;
  bool asymptotic_holds = true;
};

// kappa_f is the curvature of f over the full ground set V_N. The a priori
// bound is (1 - k) + k (1 - k) rho(kappa_I, alpha_max) sum_i E[VoC*_i] /
// f_opt, the a posteriori one 1 / (1 + beta k), and the asymptotic one
// max(1 - k, 1 / (1 + beta k)).
BoundReport evaluate_bounds(const BoundAccumulator& window,
                            const SubmodularOracle& f,
                            const std::vector<std::vector<int>>& neighborhoods,
                            std::span<const int> bandwidths,
                            const BoundOptions& options = {});

// Every (agent, action) element of the oracle.
std::vector<Element> full_ground_set(const SubmodularOracle& f);

}  // namespace anaconda::analysis
