// Copyright 2026 The Teamform Authors
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

#ifndef TEAMFORM_GRAPH_HPP
#define TEAMFORM_GRAPH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace teamform {

using UserId = int;
using ItemId = int;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Absolute tolerance for distance comparisons. All algorithms only add and
// compare non-negative edge weights, so a fixed absolute tolerance suffices.
inline constexpr double kDistTol = 1e-9;

/// A network member: the skills they hold, how many task units they can
/// absorb in total, and the price they charge for participating.
struct User {
  UserId id = 0;
  std::vector<ItemId> skills;  // sorted, duplicate-free
  int capacity = 0;
  double price = 0.0;

  bool has_skill(ItemId item) const {
    return std::binary_search(skills.begin(), skills.end(), item);
  }
};

struct Edge {
  UserId u = 0;
  UserId v = 0;
  double weight = 0.0;
};

/// Weighted undirected social graph. Users are indexed 0..n-1; edges carry
/// non-negative collaboration costs. Immutable by convention once built:
/// every algorithm in this library takes it by const reference.
struct SocialNetwork {
  std::vector<User> users;
  std::vector<Edge> edges;

  int user_count() const { return static_cast<int>(users.size()); }

  bool valid_user(UserId u) const { return u >= 0 && u < user_count(); }

  std::vector<UserId> all_users() const {
    std::vector<UserId> ids(users.size());
    for (int i = 0; i < user_count(); ++i) ids[i] = i;
    return ids;
  }
};

/// Report-style validation result: one human-readable line per violation,
/// empty report means all structural invariants hold.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string message) { violations.push_back(std::move(message)); }
};

/// Checks every structural invariant of a SocialNetwork: contiguous ids,
/// endpoint validity, no self-loops, no duplicate unordered pairs, no
/// negative weights, non-negative capacities and prices, sorted unique
/// skills. Duplicate parallel edges are reported rather than merged so that
/// data errors surface instead of being silently resolved.
inline ValidationReport validate(const SocialNetwork& network) {
  ValidationReport report;
  const int n = network.user_count();
  for (int i = 0; i < n; ++i) {
    const User& user = network.users[i];
    if (user.id != i) {
      report.add("user at index " + std::to_string(i) + " has id " +
                 std::to_string(user.id) + "; ids must be contiguous 0..n-1");
    }
    if (user.capacity < 0) {
      report.add("user " + std::to_string(i) + " has negative capacity");
    }
    if (user.price < 0.0 || std::isnan(user.price)) {
      report.add("user " + std::to_string(i) + " has invalid price");
    }
    for (std::size_t s = 0; s < user.skills.size(); ++s) {
      if (user.skills[s] < 0) {
        report.add("user " + std::to_string(i) + " has negative skill id");
      }
      if (s > 0 && user.skills[s] <= user.skills[s - 1]) {
        report.add("user " + std::to_string(i) +
                   " has unsorted or duplicate skills");
        break;
      }
    }
  }
  std::set<std::pair<UserId, UserId>> seen;
  for (std::size_t e = 0; e < network.edges.size(); ++e) {
    const Edge& edge = network.edges[e];
    const std::string where = "edge #" + std::to_string(e) + " (" +
                              std::to_string(edge.u) + "," +
                              std::to_string(edge.v) + ")";
    if (!network.valid_user(edge.u) || !network.valid_user(edge.v)) {
      report.add(where + ": endpoint out of range");
      continue;
    }
    if (edge.u == edge.v) {
      report.add(where + ": self-loop");
      continue;
    }
    if (edge.weight < 0.0 || std::isnan(edge.weight)) {
      report.add(where + ": negative weight");
    }
    auto key = std::minmax(edge.u, edge.v);
    if (!seen.insert(key).second) {
      report.add(where + ": duplicate unordered pair");
    }
  }
  return report;
}

/// Full-graph pairwise shortest-path distances. dist(u,u) = 0 and
/// disconnected pairs are +infinity.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kInf) {
    for (int i = 0; i < n; ++i) at(i, i) = 0.0;
  }

  int size() const { return n_; }

  double& at(int u, int v) { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  double at(int u, int v) const {
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }

 private:
  int n_ = 0;
  std::vector<double> d_;
};

/// Single-source shortest paths with predecessors, for path reconstruction.
struct ShortestPathTree {
  std::vector<double> dist;
  std::vector<UserId> parent;  // -1 at the source and on unreachable nodes
};

namespace detail {

using AdjacencyList = std::vector<std::vector<std::pair<UserId, double>>>;

inline AdjacencyList build_adjacency(const SocialNetwork& network) {
  AdjacencyList adj(network.user_count());
  for (const Edge& e : network.edges) {
    adj[e.u].push_back({e.v, e.weight});
    adj[e.v].push_back({e.u, e.weight});
  }
  // Sorted neighbor order keeps parent selection deterministic.
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

inline ShortestPathTree dijkstra(const AdjacencyList& adj, UserId source) {
  const int n = static_cast<int>(adj.size());
  ShortestPathTree tree;
  tree.dist.assign(n, kInf);
  tree.parent.assign(n, -1);
  tree.dist[source] = 0.0;
  using Entry = std::pair<double, UserId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  heap.push({0.0, source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > tree.dist[u]) continue;
    for (auto [v, w] : adj[u]) {
      const double cand = d + w;
      if (cand < tree.dist[v]) {
        tree.dist[v] = cand;
        tree.parent[v] = u;
        heap.push({cand, v});
      }
    }
  }
  return tree;
}

}  // namespace detail

inline ShortestPathTree dijkstra(const SocialNetwork& network, UserId source) {
  if (!network.valid_user(source)) {
    throw std::invalid_argument("dijkstra: source out of range");
  }
  return detail::dijkstra(detail::build_adjacency(network), source);
}

/// All-pairs shortest-path distances over the full graph.
inline DistanceMatrix shortest_path_distances(const SocialNetwork& network) {
  const int n = network.user_count();
  DistanceMatrix dist(n);
  const auto adj = detail::build_adjacency(network);
  for (int s = 0; s < n; ++s) {
    const auto tree = detail::dijkstra(adj, s);
    for (int v = 0; v < n; ++v) dist.at(s, v) = tree.dist[v];
  }
  return dist;
}

/// Row-restricted variant: only rows for the given sources are computed,
/// all other rows keep +infinity off the diagonal.
inline DistanceMatrix shortest_path_distances(
    const SocialNetwork& network, const std::vector<UserId>& sources) {
  const int n = network.user_count();
  DistanceMatrix dist(n);
  const auto adj = detail::build_adjacency(network);
  for (UserId s : sources) {
    if (!network.valid_user(s)) {
      throw std::invalid_argument("shortest_path_distances: bad source id");
    }
    const auto tree = detail::dijkstra(adj, s);
    for (int v = 0; v < n; ++v) dist.at(s, v) = tree.dist[v];
  }
  return dist;
}

/// Pairwise distance table restricted to a team, measured in the full graph
/// (paths may route through non-team vertices).
inline std::vector<std::vector<double>> induced_distance(
    const SocialNetwork& network, const std::vector<UserId>& team) {
  for (UserId u : team) {
    if (!network.valid_user(u)) {
      throw std::invalid_argument("induced_distance: bad user id " +
                                  std::to_string(u));
    }
  }
  const auto adj = detail::build_adjacency(network);
  std::vector<std::vector<double>> table(team.size(),
                                         std::vector<double>(team.size()));
  for (std::size_t i = 0; i < team.size(); ++i) {
    const auto tree = detail::dijkstra(adj, team[i]);
    for (std::size_t j = 0; j < team.size(); ++j) {
      table[i][j] = tree.dist[team[j]];
    }
  }
  return table;
}

/// Vertices of the shortest path between two nodes (inclusive of endpoints),
/// reconstructed from the source's predecessor tree. Empty if unreachable.
inline std::vector<UserId> shortest_path(const SocialNetwork& network,
                                         UserId from, UserId to) {
  const auto tree = dijkstra(network, from);
  if (tree.dist[to] == kInf) return {};
  std::vector<UserId> path;
  for (UserId v = to; v != -1; v = tree.parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Connected-component label per user; labels are the smallest user id in
/// the component.
inline std::vector<int> component_labels(const SocialNetwork& network) {
  const int n = network.user_count();
  std::vector<int> label(n, -1);
  const auto adj = detail::build_adjacency(network);
  for (int s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    std::vector<UserId> stack{s};
    label[s] = s;
    while (!stack.empty()) {
      UserId u = stack.back();
      stack.pop_back();
      for (auto [v, w] : adj[u]) {
        (void)w;
        if (label[v] == -1) {
          label[v] = s;
          stack.push_back(v);
        }
      }
    }
  }
  return label;
}

}  // namespace teamform

#endif  // TEAMFORM_GRAPH_HPP
