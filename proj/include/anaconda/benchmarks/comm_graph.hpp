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

#include <vector>

namespace anaconda::bench {

// Directed communication graph. An edge j -> i means j can transmit to i,
// i.e. j is in i's coordination neighborhood M_i.
class CommGraph {
 public:
  explicit CommGraph(int node_count);
  // Edge j -> i for every j in neighborhoods[i].
  static CommGraph from_neighborhoods(
      const std::vector<std::vector<int>>& neighborhoods);

  void add_edge(int from, int to);
  int node_count() const { return static_cast<int>(out_.size()); }
  // Sorted successor ids.
  const std::vector<int>& out_neighbors(int node) const { return out_[node]; }
  bool has_edge(int from, int to) const;
  long edge_count() const;
  bool strongly_connected() const;
  // Hop count of the shortest directed path from `source` to every node;
  // -1 where unreachable.
  std::vector<int> hops_from(int source) const;

 private:
  std::vector<std::vector<int>> out_;
};

// Depth-first visiting order and the hop distance between consecutive
// agents of that order.
struct DfsOrder {
  std::vector<int> order;  // pi: position -> agent
  std::vector<int> hops;   // hops[k] = d(order[k], order[k + 1])
};

// Preorder DFS from `root` over out-edges, children in ascending id. Throws
// ConnectivityError if the graph is not strongly connected.
DfsOrder dfs_order(const CommGraph& graph, int root = 0);

// Sum over k = 1..n-1 of k * tau_c * d(pi(k), pi(k+1)): the k-th forward
// message carries the k actions chosen so far.
double sequential_comm_time(const DfsOrder& order, double tau_c);

}  // namespace anaconda::bench
