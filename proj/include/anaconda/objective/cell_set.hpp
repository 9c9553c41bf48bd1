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
#include <vector>

namespace anaconda::objective {

// Fixed-universe bitset over cell indices [0, universe).
class CellSet {
 public:
  CellSet() = default;
  explicit CellSet(int universe);

  void insert(int cell);
  bool contains(int cell) const;
  int count() const;
  int universe() const { return universe_; }
  std::vector<int> members() const;

  std::span<const std::uint64_t> words() const { return words_; }

  bool operator==(const CellSet&) const = default;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace anaconda::objective
