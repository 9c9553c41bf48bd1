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

#include "anaconda/objective/set_function.hpp"

#include <cmath>
#include <string>

#include "anaconda/errors.hpp"

namespace anaconda::objective {
namespace {

std::vector<Element> pick(std::span<const Element> universe,
                          std::uint64_t mask) {
  std::vector<Element> out;
  for (std::size_t k = 0; k < universe.size(); ++k) {
    if ((mask >> k) & 1U) out.push_back(universe[k]);
  }
  return out;
}

}  // namespace

double marginal_gain(const SubmodularOracle& f, int agent, int action,
                     const JointAssignment& context) {
  if (context.contains(agent)) {
    throw InvalidArgument("agent " + std::to_string(agent) +
                          " is already in the context");
  }
  const JointAssignment extended = context.with(agent, action);
  return f.eval(extended) - f.eval(context);
}

double voc(const SubmodularOracle& f, int agent, int action,
           const JointAssignment& neighbor_actions) {
  if (neighbor_actions.contains(agent)) {
    throw InvalidArgument("agent " + std::to_string(agent) +
                          " cannot be its own neighbor");
  }
  const Element self{agent, action};
  const double alone = f.value(std::span<const Element>(&self, 1));
  return alone - marginal_gain(f, agent, action, neighbor_actions);
}

double curvature(const SubmodularOracle& f, std::span<const Element> ground) {
  if (ground.empty()) throw InvalidArgument("empty ground set");
  for (const Element& e : ground) f.validate(e);
  const int n = static_cast<int>(ground.size());
  // Direct evaluation; the bitmask helper is limited to 64 elements.
  const double full = f.value(ground);
  double min_ratio = 0.0;
  bool any = false;
  std::vector<Element> rest;
  for (int v = 0; v < n; ++v) {
    const double single = f.value(ground.subspan(v, 1));
    if (!(single > 0.0)) continue;
    rest.assign(ground.begin(), ground.end());
    rest.erase(rest.begin() + v);
    const double ratio = (full - f.value(rest)) / single;
    min_ratio = any ? std::min(min_ratio, ratio) : ratio;
    any = true;
  }
  if (!any) {
    throw DegenerateFunctionError("every singleton has zero value");
  }
  const double kappa = 1.0 - min_ratio;
  return kappa < 0.0 ? 0.0 : (kappa > 1.0 ? 1.0 : kappa);
}

std::vector<double> subset_values(const SubmodularOracle& f,
                                  std::span<const Element> universe) {
  const int n = static_cast<int>(universe.size());
  if (n > 24) throw CapacityError("subset table limited to 24 elements");
  std::vector<double> table(std::size_t{1} << n, 0.0);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = f.value(pick(universe, mask));
  }
  return table;
}

SecondOrderResult check_second_order_submodular(
    const SubmodularOracle& f, std::span<const Element> universe,
    double tolerance) {
  const int n = static_cast<int>(universe.size());
  if (n > kMaxSecondOrderUniverse) {
    throw CapacityError("second-order check limited to " +
                        std::to_string(kMaxSecondOrderUniverse) +
                        " elements, got " + std::to_string(n));
  }
  const std::vector<double> table = subset_values(f, universe);
  auto gain = [&](int s, std::uint64_t x) {
    return table[x | (std::uint64_t{1} << s)] - table[x];
  };
  SecondOrderResult result;
  // Each element goes to none / A / B / C: a base-4 counter over n digits.
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::uint64_t a = 0, b = 0, c = 0;
    for (int k = 0; k < n; ++k) {
      const std::uint64_t bit = std::uint64_t{1} << k;
      if (digit[k] == 1) a |= bit;
      if (digit[k] == 2) b |= bit;
      if (digit[k] == 3) c |= bit;
    }
    for (int s = 0; s < n; ++s) {
      const double lhs = gain(s, c) - gain(s, a | c);
      const double rhs = gain(s, b | c) - gain(s, a | b | c);
      ++result.checked;
      if (lhs + tolerance < rhs && result.ok) {
        result.ok = false;
        result.witness = SecondOrderWitness{pick(universe, a), pick(universe, b),
                                            pick(universe, c), universe[s], lhs,
                                            rhs};
      }
    }
    int k = 0;
    while (k < n && digit[k] == 3) digit[k++] = 0;
    if (k == n) break;
    ++digit[k];
  }
  return result;
}

SubmodularityAudit audit_submodularity(const SubmodularOracle& f,
                                       std::span<const Element> universe,
                                       double tolerance) {
  const int n = static_cast<int>(universe.size());
  if (n > kMaxAuditUniverse) {
    throw CapacityError("submodularity audit limited to " +
                        std::to_string(kMaxAuditUniverse) + " elements, got " +
                        std::to_string(n));
  }
  const std::vector<double> table = subset_values(f, universe);
  SubmodularityAudit audit;
  if (std::abs(table[0]) > tolerance) {
    audit.normalized = false;
    audit.witness = "f(empty) = " + std::to_string(table[0]);
  }
  // Each element goes to neither / B only / both A and B.
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::uint64_t a = 0, b = 0;
    for (int k = 0; k < n; ++k) {
      const std::uint64_t bit = std::uint64_t{1} << k;
      if (digit[k] >= 1) b |= bit;
      if (digit[k] == 2) a |= bit;
    }
    ++audit.pairs_checked;
    if (table[a] > table[b] + tolerance && audit.monotone) {
      audit.monotone = false;
      if (audit.witness.empty()) {
        audit.witness = "f(" + describe(pick(universe, a)) + ") > f(" +
                        describe(pick(universe, b)) + ")";
      }
    }
    for (int s = 0; s < n && audit.submodular; ++s) {
      const std::uint64_t bit = std::uint64_t{1} << s;
      const double ga = table[a | bit] - table[a];
      const double gb = table[b | bit] - table[b];
      if (ga + tolerance < gb) {
        audit.submodular = false;
        if (audit.witness.empty()) {
          audit.witness = "f(s|" + describe(pick(universe, a)) + ") < f(s|" +
                          describe(pick(universe, b)) + ") for s = " +
                          describe(universe.subspan(s, 1));
        }
      }
    }
    int k = 0;
    while (k < n && digit[k] == 2) digit[k++] = 0;
    if (k == n) break;
    ++digit[k];
  }
  return audit;
}

std::string describe(std::span<const Element> elements) {
  std::string out = "{";
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (k > 0) out += ", ";
    out += std::to_string(elements[k].agent) + ":" +
           std::to_string(elements[k].action);
  }
  return out + "}";
}

}  // namespace anaconda::objective
