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

#include "anaconda/objective/cell_set.hpp"
#include "anaconda/objective/coverage_world.hpp"
#include "anaconda/objective/joint_assignment.hpp"

namespace anaconda::objective {

// A normalized, monotone submodular set function over V_N, the union of the
// agents' action sets. Evaluation is const and thread-safe.
class SubmodularOracle {
 public:
  virtual ~SubmodularOracle() = default;

  virtual int agent_count() const = 0;
  virtual int action_count(int agent) const = 0;

  // f over an arbitrary collection of elements. Several actions of one agent
  // and repeated elements are allowed; repeats do not change the value.
  virtual double value(std::span<const Element> elements) const = 0;

  // B_i = max over the agent's actions of f({a}). Bandit rewards are divided
  // by it. Agents whose every action is worthless get B_i = 1.
  virtual double normalizer(int agent) const;

  // f(A) for a valid assignment. Throws InvalidArgument on bad indices.
  double eval(const JointAssignment& assignment) const;

  void validate(const Element& e) const;

 protected:
  // Derived constructors call this once their value() is usable.
  void cache_normalizers();

 private:
  std::vector<double> normalizers_;
};

// Counts calls to value() made through it. Used for the per-agent
// evaluation audit; one instance per agent per round, never shared.
class CountingOracle final : public SubmodularOracle {
 public:
  explicit CountingOracle(const SubmodularOracle& inner) : inner_(inner) {}

  int agent_count() const override { return inner_.agent_count(); }
  int action_count(int agent) const override {
    return inner_.action_count(agent);
  }
  double value(std::span<const Element> elements) const override {
    ++calls_;
    return inner_.value(elements);
  }
  double normalizer(int agent) const override {
    return inner_.normalizer(agent);
  }

  long calls() const { return calls_; }
  void reset() { calls_ = 0; }

 private:
  const SubmodularOracle& inner_;
  mutable long calls_ = 0;
};

// Weighted coverage: each element covers a fixed set of cells from a common
// universe, every cell worth cell_area. f(S) = cell_area * |union of cells|.
class CoverageOracle final : public SubmodularOracle {
 public:
  // footprints[agent][action]; all sets must share one universe size.
  CoverageOracle(std::vector<std::vector<CellSet>> footprints,
                 double cell_area);

  // Universe = the world's interest cells; footprint = coverage_cells().
  static CoverageOracle from_world(const CoverageWorld& world);

  int agent_count() const override {
    return static_cast<int>(footprints_.size());
  }
  int action_count(int agent) const override;
  double value(std::span<const Element> elements) const override;

  const CellSet& footprint(int agent, int action) const;
  int universe() const { return universe_; }
  double cell_area() const { return cell_area_; }
  double total_area() const { return universe_ * cell_area_; }
  // 100 * value / total_area.
  double coverage_percent(double value) const;

 private:
  std::vector<std::vector<CellSet>> footprints_;
  std::vector<std::vector<int>> singleton_counts_;
  int universe_ = 0;
  int words_ = 0;
  double cell_area_ = 1.0;
};

}  // namespace anaconda::objective
