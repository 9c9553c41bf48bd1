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

#include "anaconda/objective/joint_assignment.hpp"

#include <algorithm>

#include "anaconda/errors.hpp"

namespace anaconda::objective {

JointAssignment::JointAssignment(std::initializer_list<Element> entries) {
  for (const Element& e : entries) insert(e.agent, e.action);
}

std::vector<Element>::iterator JointAssignment::find_slot(int agent) {
  return std::lower_bound(
      entries_.begin(), entries_.end(), agent,
      [](const Element& e, int a) { return e.agent < a; });
}

std::vector<Element>::const_iterator JointAssignment::find_slot(
    int agent) const {
  return std::lower_bound(
      entries_.begin(), entries_.end(), agent,
      [](const Element& e, int a) { return e.agent < a; });
}

void JointAssignment::insert(int agent, int action) {
  auto it = find_slot(agent);
  if (it != entries_.end() && it->agent == agent) {
    throw InvalidArgument("agent " + std::to_string(agent) +
                          " already has an action in the assignment");
  }
  entries_.insert(it, Element{agent, action});
}

void JointAssignment::set(int agent, int action) {
  auto it = find_slot(agent);
  if (it != entries_.end() && it->agent == agent) {
    it->action = action;
    return;
  }
  entries_.insert(it, Element{agent, action});
}

void JointAssignment::erase(int agent) {
  auto it = find_slot(agent);
  if (it != entries_.end() && it->agent == agent) entries_.erase(it);
}

bool JointAssignment::contains(int agent) const {
  auto it = find_slot(agent);
  return it != entries_.end() && it->agent == agent;
}

std::optional<int> JointAssignment::action_of(int agent) const {
  auto it = find_slot(agent);
  if (it != entries_.end() && it->agent == agent) return it->action;
  return std::nullopt;
}

JointAssignment JointAssignment::with(int agent, int action) const {
  JointAssignment copy = *this;
  copy.insert(agent, action);
  return copy;
}

std::string JointAssignment::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k > 0) out += ", ";
    out += std::to_string(entries_[k].agent) + ":" +
           std::to_string(entries_[k].action);
  }
  return out + "}";
}

}  // namespace anaconda::objective
