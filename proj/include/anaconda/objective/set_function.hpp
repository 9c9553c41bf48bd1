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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anaconda/objective/joint_assignment.hpp"
#include "anaconda/objective/oracle.hpp"

namespace anaconda::objective {

// f(a | context) = f(context + a) - f(context). The agent must not already
// be assigned in the context.
double marginal_gain(const SubmodularOracle& f, int agent, int action,
                     const JointAssignment& context);

// Value of Coordination: f(a) - f(a | neighbor_actions), the overlap between
// an agent's action and what its neighbors chose.
double voc(const SubmodularOracle& f, int agent, int action,
           const JointAssignment& neighbor_actions);

// Curvature 1 - min_v [f(V) - f(V \ v)] / f(v) over the ground set. Elements
// with f(v) = 0 are skipped; if every element is zero this throws
// DegenerateFunctionError.
double curvature(const SubmodularOracle& f, std::span<const Element> ground);

// Curvature of an abstract set function over n ground elements, with
// subsets passed as bitmasks. Zero singletons are skipped; `degenerate`
// reports the all-zero case (result 0).
template <class SetValue>
double curvature_of(int n, SetValue&& value_of, bool* degenerate = nullptr) {
  const std::uint64_t all = n >= 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1;
  const double full = value_of(all);
  double min_ratio = 1.0;
  bool any = false;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t bit = std::uint64_t{1} << v;
    const double single = value_of(bit);
    if (!(single > 0.0)) continue;
    const double ratio = (full - value_of(all & ~bit)) / single;
    min_ratio = any ? std::min(min_ratio, ratio) : ratio;
    any = true;
  }
  if (degenerate != nullptr) *degenerate = !any;
  if (!any) return 0.0;
  const double kappa = 1.0 - min_ratio;
  return kappa < 0.0 ? 0.0 : (kappa > 1.0 ? 1.0 : kappa);
}

// f evaluated on every subset of a small universe, indexed by bitmask.
std::vector<double> subset_values(const SubmodularOracle& f,
                                  std::span<const Element> universe);

struct SecondOrderWitness {
  std::vector<Element> a;
  std::vector<Element> b;
  std::vector<Element> c;
  Element s;
  double lhs = 0.0;  // f(s|C) - f(s|A+C)
  double rhs = 0.0;  // f(s|B+C) - f(s|A+B+C)
};

struct SecondOrderResult {
  bool ok = true;
  std::optional<SecondOrderWitness> witness;
  long long checked = 0;
};

inline constexpr int kMaxSecondOrderUniverse = 10;

// Exhaustively checks f(s|C) - f(s|A+C) >= f(s|B+C) - f(s|A+B+C) over all
// pairwise disjoint A, B, C within the universe and every s in it. Throws
// CapacityError above kMaxSecondOrderUniverse elements.
SecondOrderResult check_second_order_submodular(
    const SubmodularOracle& f, std::span<const Element> universe,
    double tolerance = 1e-9);

struct SubmodularityAudit {
  bool normalized = true;
  bool monotone = true;
  bool submodular = true;
  long long pairs_checked = 0;
  std::string witness;  // first violation, empty if none

  bool ok() const { return normalized && monotone && submodular; }
};

inline constexpr int kMaxAuditUniverse = 14;

// Normalization, monotonicity over all A in B, and submodularity
// f(s|A) >= f(s|B) for all A in B and s, over subsets of the universe.
SubmodularityAudit audit_submodularity(const SubmodularOracle& f,
                                       std::span<const Element> universe,
                                       double tolerance = 1e-9);

std::string describe(std::span<const Element> elements);

}  // namespace anaconda::objective
