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

#include "anaconda/objective/cell_set.hpp"

#include <bit>
#include <string>

#include "anaconda/errors.hpp"

namespace anaconda::objective {

CellSet::CellSet(int universe)
    : universe_(universe),
      words_(static_cast<std::size_t>((universe + 63) / 64), 0) {
  if (universe < 0) throw InvalidArgument("negative cell universe");
}

void CellSet::insert(int cell) {
  if (cell < 0 || cell >= universe_) {
    throw InvalidArgument("cell index " + std::to_string(cell) +
                          " outside universe");
  }
  words_[cell / 64] |= std::uint64_t{1} << (cell % 64);
}

bool CellSet::contains(int cell) const {
  if (cell < 0 || cell >= universe_) return false;
  return (words_[cell / 64] >> (cell % 64)) & 1U;
}

int CellSet::count() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::vector<int> CellSet::members() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      int bit = std::countr_zero(bits);
      out.push_back(static_cast<int>(w * 64) + bit);
      bits &= bits - 1;
    }
  }
  return out;
}

}  // namespace anaconda::objective
