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

#ifndef TEAMFORM_COSTS_HPP
#define TEAMFORM_COSTS_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "teamform/graph.hpp"
#include "teamform/task.hpp"

namespace teamform {

/// Maximum full-graph shortest-path distance over team pairs; 0 for a
/// singleton; +infinity when the team spans components. Throws on an empty
/// team.
inline double diameter_cost(const DistanceMatrix& dist,
                            const std::vector<UserId>& team) {
  if (team.empty()) throw std::invalid_argument("diameter_cost: empty team");
  double worst = 0.0;
  for (std::size_t i = 0; i < team.size(); ++i) {
    for (std::size_t j = i + 1; j < team.size(); ++j) {
      worst = std::max(worst, dist.at(team[i], team[j]));
    }
  }
  return worst;
}

inline double diameter_cost(const SocialNetwork& network,
                            const std::vector<UserId>& team) {
  return diameter_cost(shortest_path_distances(network, team), team);
}

struct MetricTree {
  double weight = 0.0;
  std::vector<std::pair<UserId, UserId>> edges;  // metric-closure edges
};

/// Minimum spanning tree of the metric closure restricted to the team,
/// the classical polynomial surrogate for the optimal Steiner tree over
/// terminals = team. Prim's algorithm rooted at the smallest id; ties on
/// key are broken by smaller vertex id, so the tree is deterministic.
inline MetricTree metric_closure_mst(const DistanceMatrix& dist,
                                     const std::vector<UserId>& team) {
  MetricTree tree;
  if (team.empty()) return tree;
  std::vector<UserId> terminals = team;
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()),
                  terminals.end());
  const std::size_t t = terminals.size();
  std::vector<bool> in_tree(t, false);
  std::vector<double> key(t, kInf);
  std::vector<int> attach(t, -1);
  key[0] = 0.0;
  for (std::size_t round = 0; round < t; ++round) {
    int best = -1;
    for (std::size_t i = 0; i < t; ++i) {
      if (in_tree[i]) continue;
      if (best == -1 || key[i] < key[best]) best = static_cast<int>(i);
    }
    in_tree[best] = true;
    if (attach[best] != -1) {
      tree.weight += key[best];
      tree.edges.push_back({terminals[attach[best]], terminals[best]});
    }
    for (std::size_t i = 0; i < t; ++i) {
      if (in_tree[i]) continue;
      const double d = dist.at(terminals[best], terminals[i]);
      if (d < key[i]) {
        key[i] = d;
        attach[i] = best;
      }
    }
  }
  return tree;
}

/// Steiner collaboration cost of a team: weight of the metric-closure MST
/// over the team. 0 for a singleton; throws on an empty team.
inline double steiner_cost(const DistanceMatrix& dist,
                           const std::vector<UserId>& team) {
  if (team.empty()) throw std::invalid_argument("steiner_cost: empty team");
  return metric_closure_mst(dist, team).weight;
}

inline double steiner_cost(const SocialNetwork& network,
                           const std::vector<UserId>& team) {
  return steiner_cost(shortest_path_distances(network, team), team);
}

/// Non-team vertices lying on the shortest paths realizing the metric-MST
/// edges: the relays through which the team's Steiner tree actually routes.
inline std::vector<UserId> steiner_connectors(const SocialNetwork& network,
                                              const std::vector<UserId>& team) {
  std::vector<UserId> relays;
  if (team.size() < 2) return relays;
  const auto dist = shortest_path_distances(network, team);
  const auto tree = metric_closure_mst(dist, team);
  for (const auto& [a, b] : tree.edges) {
    const auto path = shortest_path(network, a, b);
    relays.insert(relays.end(), path.begin(), path.end());
  }
  std::sort(relays.begin(), relays.end());
  relays.erase(std::unique(relays.begin(), relays.end()), relays.end());
  // Team members are never relays, whatever order the caller passed.
  std::vector<UserId> sorted_team = team;
  std::sort(sorted_team.begin(), sorted_team.end());
  std::vector<UserId> result;
  std::set_difference(relays.begin(), relays.end(), sorted_team.begin(),
                      sorted_team.end(), std::back_inserter(result));
  return result;
}

/// Priced objective alpha * sum of team prices + beta * f(team), with f
/// selected by the cost model's kind. Requires pricing to be present.
inline double priced_cost(const SocialNetwork& network,
                          const std::vector<UserId>& team,
                          const CostModel& model) {
  if (!model.pricing) {
    throw std::invalid_argument("priced_cost: cost model carries no pricing");
  }
  const auto [alpha, beta] = *model.pricing;
  double price_sum = 0.0;
  for (UserId u : team) {
    if (!network.valid_user(u)) {
      throw std::invalid_argument("priced_cost: bad user id");
    }
    price_sum += network.users[u].price;
  }
  double social = 0.0;
  if (!team.empty()) {
    const auto dist = shortest_path_distances(network, team);
    social = model.kind == CostKind::kDiameter ? diameter_cost(dist, team)
                                               : steiner_cost(dist, team);
  }
  return alpha * price_sum + beta * social;
}

}  // namespace teamform

#endif  // TEAMFORM_COSTS_HPP
