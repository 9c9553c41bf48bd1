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

#include <stdexcept>
#include <string>

namespace anaconda {

// Precondition violations on indices, sizes and parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A benchmark that needs a (strongly) connected communication graph got one
// that is not.
class ConnectivityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive oracle was asked to enumerate more than its cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Curvature requested on a set function whose singletons are all zero.
class DegenerateFunctionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// beta = sum of marginals / sum of f is undefined when every f(A_t) is zero.
class UndefinedBetaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Budget mode with a zero per-round time would run forever.
class InfiniteRoundsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace anaconda
