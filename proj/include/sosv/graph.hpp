// Copyright 2026 The sosv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace sosv::graph {

// Adjacency map. graph[u] holds the successors of u. Every successor should
// also appear as a key; add_edge() maintains that.
template <typename Node>
using Digraph = std::map<Node, std::set<Node>>;

template <typename Node>
void add_node(Digraph<Node>& g, const Node& n) {
  g.try_emplace(n);
}

template <typename Node>
void add_edge(Digraph<Node>& g, const Node& from, const Node& to) {
  g[from].insert(to);
  g.try_emplace(to);
}

// Reads an edge u -> v as "u depends on v" and returns an order in which
// every node comes after all of its successors. Among the valid orders the
// lexicographically smallest is returned (smallest ready node first).
// nullopt when the graph has a cycle.
template <typename Node>
std::optional<std::vector<Node>> dependency_order(const Digraph<Node>& g) {
  std::map<Node, std::size_t> pending;
  Digraph<Node> dependents;
  for (const auto& [u, succ] : g) {
    pending[u] += 0;
    for (const auto& v : succ) {
      ++pending[u];
      dependents[v].insert(u);
      pending.try_emplace(v, 0);
    }
  }
  std::set<Node> ready;
  for (const auto& [n, count] : pending) {
    if (count == 0) ready.insert(n);
  }
  std::vector<Node> order;
  order.reserve(pending.size());
  while (!ready.empty()) {
    Node next = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(next);
    if (auto it = dependents.find(next); it != dependents.end()) {
      for (const auto& d : it->second) {
        if (--pending[d] == 0) ready.insert(d);
      }
    }
  }
  if (order.size() != pending.size()) return std::nullopt;
  return order;
}

namespace detail {

// BFS distance from every node to `target` along edges, restricted to nodes
// accepted by `allowed`.
template <typename Node, typename Pred>
std::map<Node, std::size_t> distances_to(const Digraph<Node>& g, const Node& target,
                                         Pred allowed) {
  Digraph<Node> reverse;
  for (const auto& [u, succ] : g) {
    for (const auto& v : succ) reverse[v].insert(u);
  }
  std::map<Node, std::size_t> dist{{target, 0}};
  std::deque<Node> queue{target};
  while (!queue.empty()) {
    Node cur = queue.front();
    queue.pop_front();
    auto it = reverse.find(cur);
    if (it == reverse.end()) continue;
    for (const auto& prev : it->second) {
      if (!allowed(prev) || dist.count(prev)) continue;
      dist[prev] = dist[cur] + 1;
      queue.push_back(prev);
    }
  }
  return dist;
}

}  // namespace detail

// Shortest directed cycle, returned as [n0, n1, ..., nk-1] for the cycle
// n0 -> n1 -> ... -> nk-1 -> n0 with n0 the smallest node on it. Among
// cycles of minimal length the lexicographically smallest such sequence is
// chosen. Self-loops are cycles of length one. Empty when acyclic.
template <typename Node>
std::vector<Node> shortest_cycle(const Digraph<Node>& g) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();

  // Length of the shortest cycle whose smallest node is `start`.
  auto cycle_length_from = [&](const Node& start, const std::map<Node, std::size_t>& dist) {
    std::size_t best = kInf;
    auto it = g.find(start);
    if (it == g.end()) return best;
    for (const auto& v : it->second) {
      if (v == start) return std::size_t{1};
      if (v < start) continue;
      if (auto d = dist.find(v); d != dist.end()) best = std::min(best, d->second + 1);
    }
    return best;
  };

  std::size_t best_len = kInf;
  std::optional<Node> best_start;
  std::map<Node, std::size_t> best_dist;
  for (const auto& [start, succ] : g) {
    (void)succ;
    auto dist = detail::distances_to(g, start, [&](const Node& n) { return !(n < start); });
    const auto len = cycle_length_from(start, dist);
    if (len < best_len) {
      best_len = len;
      best_start = start;
      best_dist = std::move(dist);
    }
  }
  if (!best_start) return {};

  // Smallest start wins ties on length, which makes it the lexicographic
  // minimum. Walk greedily through the smallest successor that can still
  // close the cycle in the remaining steps.
  const Node& start = *best_start;
  std::vector<Node> cycle{start};
  Node cur = start;
  for (std::size_t step = 1; step < best_len; ++step) {
    const std::size_t remaining = best_len - step;  // edges left after this one
    for (const auto& v : g.at(cur)) {
      if (v < start || v == start) continue;
      auto d = best_dist.find(v);
      if (d != best_dist.end() && d->second <= remaining &&
          std::find(cycle.begin(), cycle.end(), v) == cycle.end()) {
        cycle.push_back(v);
        cur = v;
        break;
      }
    }
  }
  return cycle;
}

// Strongly connected components (Tarjan), each sorted; components are
// returned in ascending order of their smallest node.
template <typename Node>
std::vector<std::vector<Node>> strongly_connected_components(const Digraph<Node>& g) {
  std::map<Node, std::size_t> index;
  std::map<Node, std::size_t> low;
  std::set<Node> on_stack;
  std::vector<Node> stack;
  std::vector<std::vector<Node>> out;
  std::size_t counter = 0;

  std::function<void(const Node&)> visit = [&](const Node& v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    if (auto it = g.find(v); it != g.end()) {
      for (const auto& w : it->second) {
        if (!index.count(w)) {
          visit(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack.count(w)) {
          low[v] = std::min(low[v], index[w]);
        }
      }
    }
    if (low[v] == index[v]) {
      std::vector<Node> component;
      Node w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        component.push_back(w);
      } while (!(w == v));
      std::sort(component.begin(), component.end());
      out.push_back(std::move(component));
    }
  };

  for (const auto& [v, succ] : g) {
    (void)succ;
    if (!index.count(v)) visit(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Induced subgraph on `keep`.
template <typename Node>
Digraph<Node> subgraph(const Digraph<Node>& g, const std::set<Node>& keep) {
  Digraph<Node> out;
  for (const auto& n : keep) out.try_emplace(n);
  for (const auto& [u, succ] : g) {
    if (!keep.count(u)) continue;
    for (const auto& v : succ) {
      if (keep.count(v)) out[u].insert(v);
    }
  }
  return out;
}

}  // namespace sosv::graph
