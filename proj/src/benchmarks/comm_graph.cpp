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

#include "anaconda/benchmarks/comm_graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "anaconda/errors.hpp"

namespace anaconda::bench {

CommGraph::CommGraph(int node_count) {
  if (node_count < 0) throw InvalidArgument("node_count must be >= 0");
  out_.resize(node_count);
}

CommGraph CommGraph::from_neighborhoods(
    const std::vector<std::vector<int>>& neighborhoods) {
  CommGraph g(static_cast<int>(neighborhoods.size()));
  for (std::size_t i = 0; i < neighborhoods.size(); ++i) {
    for (int j : neighborhoods[i]) g.add_edge(j, static_cast<int>(i));
  }
  return g;
}

void CommGraph::add_edge(int from, int to) {
  const int n = node_count();
  if (from < 0 || from >= n || to < 0 || to >= n) {
    throw InvalidArgument("edge " + std::to_string(from) + "->" +
                          std::to_string(to) + " references a missing node");
  }
  if (from == to) throw InvalidArgument("self-loops are not allowed");
  auto& succ = out_[from];
  auto it = std::lower_bound(succ.begin(), succ.end(), to);
  if (it == succ.end() || *it != to) succ.insert(it, to);
}

bool CommGraph::has_edge(int from, int to) const {
  const auto& succ = out_[from];
  return std::binary_search(succ.begin(), succ.end(), to);
}

long CommGraph::edge_count() const {
  long total = 0;
  for (const auto& succ : out_) total += static_cast<long>(succ.size());
  return total;
}

std::vector<int> CommGraph::hops_from(int source) const {
  std::vector<int> dist(out_.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : out_[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool CommGraph::strongly_connected() const {
  const int n = node_count();
  if (n <= 1) return true;
  const auto forward = hops_from(0);
  if (std::count(forward.begin(), forward.end(), -1) > 0) return false;
  CommGraph reversed(n);
  for (int u = 0; u < n; ++u) {
    for (int v : out_[u]) reversed.out_[v].push_back(u);
  }
  for (auto& succ : reversed.out_) std::sort(succ.begin(), succ.end());
  const auto backward = reversed.hops_from(0);
  return std::count(backward.begin(), backward.end(), -1) == 0;
}

DfsOrder dfs_order(const CommGraph& graph, int root) {
  const int n = graph.node_count();
  if (n == 0) return {};
  if (root < 0 || root >= n) throw InvalidArgument("root out of range");
  if (!graph.strongly_connected()) {
    throw ConnectivityError(
        "communication graph is not strongly connected; sequential "
        "benchmarks need a connected network");
  }
  DfsOrder result;
  std::vector<char> seen(n, 0);
  // Explicit stack of (node, next child position) keeps deep graphs safe.
  std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
  seen[root] = 1;
  result.order.push_back(root);
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    const auto& succ = graph.out_neighbors(node);
    if (next == succ.size()) {
      stack.pop_back();
      continue;
    }
    const int child = succ[next++];
    if (!seen[child]) {
      seen[child] = 1;
      result.order.push_back(child);
      stack.push_back({child, 0});
    }
  }
  for (std::size_t k = 0; k + 1 < result.order.size(); ++k) {
    result.hops.push_back(
        graph.hops_from(result.order[k])[result.order[k + 1]]);
  }
  return result;
}

double sequential_comm_time(const DfsOrder& order, double tau_c) {
  double total = 0.0;
  for (std::size_t k = 0; k < order.hops.size(); ++k) {
    total += static_cast<double>(k + 1) * tau_c * order.hops[k];
  }
  return total;
}

}  // namespace anaconda::bench
