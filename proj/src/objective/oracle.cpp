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

#include "anaconda/objective/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>

#include "anaconda/errors.hpp"

namespace anaconda::objective {

double SubmodularOracle::normalizer(int agent) const {
  if (agent < 0 || agent >= static_cast<int>(normalizers_.size())) {
    throw InvalidArgument("no normalizer for agent " + std::to_string(agent));
  }
  return normalizers_[agent];
}

double SubmodularOracle::eval(const JointAssignment& assignment) const {
  for (const Element& e : assignment) validate(e);
  return value(assignment.elements());
}

void SubmodularOracle::validate(const Element& e) const {
  if (e.agent < 0 || e.agent >= agent_count()) {
    throw InvalidArgument("agent id " + std::to_string(e.agent) +
                          " out of range");
  }
  if (e.action < 0 || e.action >= action_count(e.agent)) {
    throw InvalidArgument("action " + std::to_string(e.action) +
                          " out of range for agent " + std::to_string(e.agent));
  }
}

void SubmodularOracle::cache_normalizers() {
  normalizers_.assign(static_cast<std::size_t>(agent_count()), 1.0);
  for (int i = 0; i < agent_count(); ++i) {
    double best = 0.0;
    for (int a = 0; a < action_count(i); ++a) {
      const Element e{i, a};
      best = std::max(best, value(std::span<const Element>(&e, 1)));
    }
    normalizers_[i] = best > 0.0 ? best : 1.0;
  }
}

CoverageOracle::CoverageOracle(std::vector<std::vector<CellSet>> footprints,
                               double cell_area)
    : footprints_(std::move(footprints)), cell_area_(cell_area) {
  if (!(cell_area > 0.0)) throw InvalidArgument("cell_area must be positive");
  bool first = true;
  for (std::size_t i = 0; i < footprints_.size(); ++i) {
    if (footprints_[i].empty()) {
      throw InvalidArgument("agent " + std::to_string(i) +
                            " has an empty action set");
    }
    std::vector<int> counts;
    for (const CellSet& cells : footprints_[i]) {
      if (first) {
        universe_ = cells.universe();
        first = false;
      } else if (cells.universe() != universe_) {
        throw InvalidArgument("footprints disagree on the cell universe");
      }
      counts.push_back(cells.count());
    }
    singleton_counts_.push_back(std::move(counts));
  }
  words_ = (universe_ + 63) / 64;
  cache_normalizers();
}

CoverageOracle CoverageOracle::from_world(const CoverageWorld& world) {
  std::vector<int> compact(static_cast<std::size_t>(world.cell_count()), -1);
  int next = 0;
  for (int cell = 0; cell < world.cell_count(); ++cell) {
    if (world.is_interest(cell)) compact[cell] = next++;
  }
  std::vector<std::vector<CellSet>> footprints;
  const auto& cams = world.cameras();
  for (std::size_t i = 0; i < cams.size(); ++i) {
    std::vector<CellSet> per_action;
    for (std::size_t a = 0; a < cams[i].directions.size(); ++a) {
      CellSet cells(next);
      for (int cell : coverage_cells(world, static_cast<int>(i),
                                     static_cast<int>(a))) {
        cells.insert(compact[cell]);
      }
      per_action.push_back(std::move(cells));
    }
    footprints.push_back(std::move(per_action));
  }
  return CoverageOracle(std::move(footprints),
                        world.cell_size() * world.cell_size());
}

int CoverageOracle::action_count(int agent) const {
  if (agent < 0 || agent >= agent_count()) {
    throw InvalidArgument("agent id " + std::to_string(agent) +
                          " out of range");
  }
  return static_cast<int>(footprints_[agent].size());
}

const CellSet& CoverageOracle::footprint(int agent, int action) const {
  validate(Element{agent, action});
  return footprints_[agent][action];
}

double CoverageOracle::value(std::span<const Element> elements) const {
  if (elements.empty()) return 0.0;
  for (const Element& e : elements) validate(e);
  if (elements.size() == 1) {
    return singleton_counts_[elements[0].agent][elements[0].action] *
           cell_area_;
  }
  constexpr std::size_t kInline = 64;
  std::array<const std::uint64_t*, kInline> inline_rows;
  std::vector<const std::uint64_t*> heap_rows;
  const std::uint64_t** rows = inline_rows.data();
  if (elements.size() > kInline) {
    heap_rows.resize(elements.size());
    rows = heap_rows.data();
  }
  for (std::size_t k = 0; k < elements.size(); ++k) {
    rows[k] = footprints_[elements[k].agent][elements[k].action].words().data();
  }
  long covered = 0;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < elements.size(); ++k) acc |= rows[k][w];
    covered += std::popcount(acc);
  }
  return covered * cell_area_;
}

double CoverageOracle::coverage_percent(double value) const {
  return 100.0 * value / total_area();
}

}  // namespace anaconda::objective
