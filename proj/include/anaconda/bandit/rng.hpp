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
#include <initializer_list>
#include <limits>

namespace anaconda::bandit {

// Roles that separate the random streams of one agent.
enum class StreamRole : std::uint64_t {
  kAction = 1,
  kNeighborSlot = 2,
  kRandomNeighbors = 3,
  kPlacement = 4,
  kSequentialAction = 5,
};

// Counter-based generator: output k of a stream is a SplitMix64 finalizer
// applied to key + k * golden-gamma, so any output is addressable from
// (key, counter) alone. Streams for distinct (seed, trial, agent, role,
// slot) paths are derived by hashing the path into the key.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t key = 0, std::uint64_t counter = 0)
      : key_(key), counter_(counter) {}

  static Rng derive(std::uint64_t master_seed,
                    std::initializer_list<std::uint64_t> path);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  // Uniform in [0, 1) with 53 random bits.
  double uniform01();
  // Uniform integer in [0, n), unbiased; n must be positive.
  std::uint64_t below(std::uint64_t n);

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

  bool operator==(const Rng&) const = default;

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

std::uint64_t mix64(std::uint64_t z);

}  // namespace anaconda::bandit
