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

// Helpers shared by the unit tests: small random coverage instances and
// deliberately naive re-implementations used as independent oracles.

#include <cstdint>
#include <fstream>
#include <functional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "anaconda/bandit/rng.hpp"
#include "anaconda/objective/cell_set.hpp"
#include "anaconda/objective/joint_assignment.hpp"
#include "anaconda/objective/oracle.hpp"

namespace testing_support {

using anaconda::bandit::Rng;
using anaconda::objective::CellSet;
using anaconda::objective::CoverageOracle;
using anaconda::objective::Element;
using anaconda::objective::JointAssignment;

// Raw footprints kept next to the oracle so tests can recompute values
// with std::set instead of bit tricks.
struct SmallInstance {
  std::vector<std::vector<std::vector<int>>> cells;  // [agent][action]
  int universe = 0;
  CoverageOracle oracle;
};

inline CellSet to_cell_set(const std::vector<int>& cells, int universe) {
  CellSet s(universe);
  for (int c : cells) s.insert(c);
  return s;
}

// Every action covers each cell independently with probability `density`;
// empty footprints are allowed.
inline SmallInstance random_instance(Rng& rng, int agents, int actions,
                                     int universe, double density = 0.3) {
  std::vector<std::vector<std::vector<int>>> cells(agents);
  std::vector<std::vector<CellSet>> footprints(agents);
  for (int i = 0; i < agents; ++i) {
    for (int a = 0; a < actions; ++a) {
      std::vector<int> fp;
      for (int c = 0; c < universe; ++c) {
        if (rng.uniform01() < density) fp.push_back(c);
      }
      footprints[i].push_back(to_cell_set(fp, universe));
      cells[i].push_back(std::move(fp));
    }
  }
  return SmallInstance{cells, universe,
                       CoverageOracle(std::move(footprints), 1.0)};
}

// |union of footprints|, by std::set.
inline double naive_value(const SmallInstance& inst,
                          std::span<const Element> elements) {
  std::set<int> covered;
  for (const Element& e : elements) {
    for (int c : inst.cells[e.agent][e.action]) covered.insert(c);
  }
  return static_cast<double>(covered.size());
}

inline double naive_value(const SmallInstance& inst, const JointAssignment& a) {
  return naive_value(inst, a.elements());
}

inline std::vector<Element> all_elements(const SmallInstance& inst) {
  std::vector<Element> out;
  for (int i = 0; i < static_cast<int>(inst.cells.size()); ++i) {
    for (int a = 0; a < static_cast<int>(inst.cells[i].size()); ++a) {
      out.push_back({i, a});
    }
  }
  return out;
}

// Visits every complete joint assignment (one action per agent), last agent
// fastest.
inline void for_each_profile(
    const std::vector<int>& action_counts,
    const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> p(action_counts.size(), 0);
  for (;;) {
    visit(p);
    int k = static_cast<int>(p.size()) - 1;
    while (k >= 0 && ++p[k] == action_counts[k]) p[k--] = 0;
    if (k < 0) return;
  }
}

inline JointAssignment profile_assignment(const std::vector<int>& p) {
  JointAssignment a;
  for (int i = 0; i < static_cast<int>(p.size()); ++i) a.insert(i, p[i]);
  return a;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace testing_support
