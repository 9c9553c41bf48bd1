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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace anaconda::objective {

// One (agent, action) pair: an element of the ground set V_N.
struct Element {
  int agent = 0;
  int action = 0;

  auto operator<=>(const Element&) const = default;
};

// A partial assignment of actions to agents; at most one action per agent.
// Entries are kept sorted by agent id so equality and iteration order are
// canonical.
class JointAssignment {
 public:
  JointAssignment() = default;
  JointAssignment(std::initializer_list<Element> entries);

  // Throws InvalidArgument if the agent already has an action.
  void insert(int agent, int action);
  // Inserts or replaces.
  void set(int agent, int action);
  void erase(int agent);

  bool contains(int agent) const;
  std::optional<int> action_of(int agent) const;

  // Copy with one more entry; throws if the agent is already assigned.
  JointAssignment with(int agent, int action) const;

  std::span<const Element> elements() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  void clear() { entries_.clear(); }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool operator==(const JointAssignment&) const = default;

  std::string to_string() const;

 private:
  std::vector<Element>::iterator find_slot(int agent);
  std::vector<Element>::const_iterator find_slot(int agent) const;

  std::vector<Element> entries_;
};

}  // namespace anaconda::objective
