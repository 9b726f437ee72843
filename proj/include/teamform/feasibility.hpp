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

#ifndef TEAMFORM_FEASIBILITY_HPP
#define TEAMFORM_FEASIBILITY_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "teamform/graph.hpp"
#include "teamform/task.hpp"

namespace teamform {

struct FlowArc {
  int from = 0;
  int to = 0;
  int cap = 0;
};

/// Layered s -> item -> user -> t network deciding whether a candidate set
/// can cover a task within capacities:
///   s -> l_i with capacity n_i, one node per required item;
///   l_i -> r_u with capacity n_i, present iff candidate u holds skill i;
///   r_u -> t with capacity c_u.
/// The task is coverable by the candidates iff the maximum flow equals the
/// task's total unit count.
struct FlowNetwork {
  int node_count = 2;
  int source = 0;
  int sink = 1;
  std::vector<FlowArc> arcs;
  std::vector<ItemId> item_of_node;  // aligned with item nodes 1..K
  std::vector<UserId> user_of_node;  // aligned with user nodes K+1..K+C

  int item_node(int item_index) const { return 1 + item_index; }
  int user_node(int user_index) const {
    return 1 + static_cast<int>(item_of_node.size()) + user_index;
  }
};

inline FlowNetwork build_flow_network(const Task& task,
                                      const std::vector<UserId>& candidates,
                                      const std::vector<User>& users) {
  for (UserId u : candidates) {
    if (u < 0 || u >= static_cast<int>(users.size())) {
      throw std::invalid_argument("build_flow_network: bad candidate id");
    }
  }
  FlowNetwork net;
  const int k = task.distinct_items();
  const int c = static_cast<int>(candidates.size());
  net.node_count = k + c + 2;
  net.source = 0;
  net.sink = k + c + 1;
  net.item_of_node.reserve(k);
  for (const Requirement& req : task.requirements) {
    net.item_of_node.push_back(req.item);
  }
  net.user_of_node = candidates;
  for (int i = 0; i < k; ++i) {
    net.arcs.push_back({net.source, net.item_node(i), task.requirements[i].units});
  }
  for (int i = 0; i < k; ++i) {
    const ItemId item = task.requirements[i].item;
    for (int j = 0; j < c; ++j) {
      if (users[candidates[j]].has_skill(item)) {
        net.arcs.push_back(
            {net.item_node(i), net.user_node(j), task.requirements[i].units});
      }
    }
  }
  for (int j = 0; j < c; ++j) {
    net.arcs.push_back({net.user_node(j), net.sink, users[candidates[j]].capacity});
  }
  return net;
}

struct FlowResult {
  int value = 0;
  std::vector<int> arc_flows;  // aligned with FlowNetwork::arcs
};

/// Integral maximum flow via shortest augmenting paths (BFS over the
/// residual graph). Arcs are scanned in insertion order, which fixes the
/// witness and makes extracted assignments deterministic.
inline FlowResult max_flow(const FlowNetwork& network) {
  const int n = network.node_count;
  const int m = static_cast<int>(network.arcs.size());
  // Residual representation: forward arc 2*i, backward arc 2*i+1.
  std::vector<int> head(2 * m), cap(2 * m);
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < m; ++i) {
    const FlowArc& arc = network.arcs[i];
    head[2 * i] = arc.to;
    cap[2 * i] = arc.cap;
    head[2 * i + 1] = arc.from;
    cap[2 * i + 1] = 0;
    adj[arc.from].push_back(2 * i);
    adj[arc.to].push_back(2 * i + 1);
  }
  FlowResult result;
  result.arc_flows.assign(m, 0);
  std::vector<int> via(n);
  while (true) {
    std::vector<int> prev(n, -1);
    prev[network.source] = network.source;
    std::queue<int> queue;
    queue.push(network.source);
    while (!queue.empty() && prev[network.sink] == -1) {
      const int u = queue.front();
      queue.pop();
      for (int e : adj[u]) {
        if (cap[e] > 0 && prev[head[e]] == -1) {
          prev[head[e]] = u;
          via[head[e]] = e;
          queue.push(head[e]);
        }
      }
    }
    if (prev[network.sink] == -1) break;
    int bottleneck = std::numeric_limits<int>::max();
    for (int v = network.sink; v != network.source; v = prev[v]) {
      bottleneck = std::min(bottleneck, cap[via[v]]);
    }
    for (int v = network.sink; v != network.source; v = prev[v]) {
      cap[via[v]] -= bottleneck;
      cap[via[v] ^ 1] += bottleneck;
    }
    result.value += bottleneck;
  }
  for (int i = 0; i < m; ++i) {
    result.arc_flows[i] = network.arcs[i].cap - cap[2 * i];
  }
  return result;
}

namespace detail {

inline Assignment extract_assignment(const FlowNetwork& network,
                                     const FlowResult& flow) {
  Assignment assignment;
  const int k = static_cast<int>(network.item_of_node.size());
  for (std::size_t a = 0; a < network.arcs.size(); ++a) {
    const FlowArc& arc = network.arcs[a];
    if (arc.from == network.source || arc.to == network.sink) continue;
    if (flow.arc_flows[a] <= 0) continue;
    const ItemId item = network.item_of_node[arc.from - 1];
    const UserId user = network.user_of_node[arc.to - 1 - k];
    assignment.add(item, user, flow.arc_flows[a]);
  }
  return assignment;
}

}  // namespace detail

/// Decides whether the candidate set covers the task within capacities,
/// returning the witness assignment read off the item->user arc flows. An
/// item whose demand no candidate can serve short-circuits to infeasible
/// before any network is built.
inline std::pair<bool, std::optional<Assignment>> is_feasible(
    const Task& task, const std::vector<UserId>& candidates,
    const std::vector<User>& users) {
  if (task.empty()) return {true, Assignment{}};
  for (const Requirement& req : task.requirements) {
    const bool anyone = std::any_of(
        candidates.begin(), candidates.end(),
        [&](UserId u) { return users[u].has_skill(req.item); });
    if (!anyone) return {false, std::nullopt};
  }
  const FlowNetwork network = build_flow_network(task, candidates, users);
  const FlowResult flow = max_flow(network);
  if (flow.value != task.total_units()) return {false, std::nullopt};
  return {true, detail::extract_assignment(network, flow)};
}

/// Unit shortfall of the best coverage the candidates admit: 0 iff feasible,
/// otherwise total demand minus the maximum flow.
inline int feasibility_deficit(const Task& task,
                               const std::vector<UserId>& candidates,
                               const std::vector<User>& users) {
  if (task.empty()) return 0;
  const FlowNetwork network = build_flow_network(task, candidates, users);
  return task.total_units() - max_flow(network).value;
}

}  // namespace teamform

#endif  // TEAMFORM_FEASIBILITY_HPP
