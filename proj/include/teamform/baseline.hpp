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

#ifndef TEAMFORM_BASELINE_HPP
#define TEAMFORM_BASELINE_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

#include "teamform/costs.hpp"
#include "teamform/feasibility.hpp"
#include "teamform/graph.hpp"
#include "teamform/task.hpp"

namespace teamform {

/// Capacity-blind greedy comparison strawman. Items are processed rarest
/// first (fewest qualified users, ties by item id); each picks the qualified
/// user closest to the team built so far, ignoring capacities and unit
/// counts entirely. A flow-based repair loop then patches the team: while
/// the assignment is infeasible, the nearest qualified outsider for the most
/// deficient item is drafted, falling back to the next deficient item when
/// one runs out of outsiders. The final cost is f(team) under the requested
/// kind so rows are comparable with the capacity-aware solvers.
inline Solution baseline_uncapacitated(const SocialNetwork& network,
                                       const Task& task,
                                       CostKind kind = CostKind::kDiameter) {
  const auto started = std::chrono::steady_clock::now();
  std::int64_t flow_calls = 0;
  auto finish = [&](Solution s) {
    s.stats.flow_calls = flow_calls;
    s.stats.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - started)
                          .count();
    return s;
  };
  Solution solution;
  solution.solver = "baseline";
  if (task.empty()) return finish(solution);

  const auto dist = shortest_path_distances(network);
  std::vector<std::vector<UserId>> qualified(task.distinct_items());
  for (int i = 0; i < task.distinct_items(); ++i) {
    for (int u = 0; u < network.user_count(); ++u) {
      if (network.users[u].has_skill(task.requirements[i].item)) {
        qualified[i].push_back(u);
      }
    }
    if (qualified[i].empty()) {
      return finish(infeasible_solution(
          "baseline",
          feasibility_deficit(task, network.all_users(), network.users)));
    }
  }

  std::vector<int> item_order(task.distinct_items());
  for (int i = 0; i < task.distinct_items(); ++i) item_order[i] = i;
  std::sort(item_order.begin(), item_order.end(), [&](int a, int b) {
    if (qualified[a].size() != qualified[b].size()) {
      return qualified[a].size() < qualified[b].size();
    }
    return task.requirements[a].item < task.requirements[b].item;
  });

  std::vector<UserId> team;
  auto team_distance = [&](UserId u) {
    if (team.empty()) return 0.0;
    double nearest = kInf;
    for (UserId member : team) nearest = std::min(nearest, dist.at(u, member));
    return nearest;
  };
  auto pick_nearest = [&](const std::vector<UserId>& pool) -> UserId {
    UserId pick = -1;
    double pick_dist = kInf;
    for (UserId u : pool) {
      if (std::find(team.begin(), team.end(), u) != team.end()) continue;
      const double d = team_distance(u);
      if (pick == -1 || d < pick_dist - kDistTol) {
        pick = u;
        pick_dist = d;
      }
    }
    return pick;
  };

  for (int i : item_order) {
    // A team member qualified for the item sits at distance 0 and would win
    // anyway; the outsider scan simply skips the no-op.
    bool already = std::any_of(team.begin(), team.end(), [&](UserId u) {
      return network.users[u].has_skill(task.requirements[i].item);
    });
    if (already) continue;
    const UserId pick = pick_nearest(qualified[i]);
    if (pick != -1) team.push_back(pick);
  }
  std::sort(team.begin(), team.end());

  // Repair loop: capacities enter only here.
  while (true) {
    ++flow_calls;
    auto [feasible, assignment] = is_feasible(task, team, network.users);
    if (feasible) {
      solution.assignment = std::move(*assignment);
      solution.team = solution.assignment.assigned_users();
      solution.cost =
          solution.team.empty()
              ? 0.0
              : (kind == CostKind::kDiameter ? diameter_cost(dist, solution.team)
                                             : steiner_cost(dist, solution.team));
      return finish(solution);
    }
    const FlowNetwork net = build_flow_network(task, team, network.users);
    const FlowResult flow = max_flow(net);
    ++flow_calls;
    std::vector<std::pair<int, int>> deficits;  // (shortfall, item index)
    for (int i = 0; i < task.distinct_items(); ++i) {
      int inflow = 0;
      for (std::size_t a = 0; a < net.arcs.size(); ++a) {
        if (net.arcs[a].from == net.source && net.arcs[a].to == net.item_node(i)) {
          inflow = flow.arc_flows[a];
        }
      }
      const int shortfall = task.requirements[i].units - inflow;
      if (shortfall > 0) deficits.push_back({shortfall, i});
    }
    std::sort(deficits.begin(), deficits.end(), [&](auto& a, auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return task.requirements[a.second].item < task.requirements[b.second].item;
    });
    UserId drafted = -1;
    for (const auto& [shortfall, i] : deficits) {
      drafted = pick_nearest(qualified[i]);
      if (drafted != -1) break;
    }
    if (drafted == -1) {
      return finish(infeasible_solution(
          "baseline", feasibility_deficit(task, team, network.users)));
    }
    team.push_back(drafted);
    std::sort(team.begin(), team.end());
  }
}

}  // namespace teamform

#endif  // TEAMFORM_BASELINE_HPP
