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

#ifndef TEAMFORM_STEINER_SOLVER_HPP
#define TEAMFORM_STEINER_SOLVER_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "teamform/costs.hpp"
#include "teamform/feasibility.hpp"
#include "teamform/graph.hpp"
#include "teamform/task.hpp"

namespace teamform {

struct GreedyChoice {
  UserId user = -1;
  int units_gained = 0;
  double attach_cost = 0.0;
};

/// One step of the cost-effectiveness greedy: among candidates outside the
/// team, picks the user minimizing attach_cost / units_gained, where
/// attach_cost is the distance to the nearest team member (0 for an empty
/// team) and units_gained is the extra coverage the enlarged team admits
/// (measured by the flow oracle, so a user whose skills are nominally useful
/// but whose capacity cannot be exploited scores 0). Ties go to the smaller
/// attach cost, then the smaller user id; on the empty-team step every
/// attach cost is 0 and ties go to the larger gain, then the smaller id.
/// Returns nullopt when every candidate outside the team gains 0 units.
inline std::optional<GreedyChoice> greedy_step(
    const Task& task, const std::vector<User>& users,
    const DistanceMatrix& dist, const std::vector<UserId>& team,
    const std::vector<UserId>& candidates, int covered_units,
    std::int64_t* flow_calls = nullptr) {
  std::optional<GreedyChoice> best;
  std::vector<UserId> probe = team;
  probe.push_back(-1);
  for (UserId u : candidates) {
    if (std::find(team.begin(), team.end(), u) != team.end()) continue;
    probe.back() = u;
    const FlowNetwork net = build_flow_network(task, probe, users);
    if (flow_calls) ++*flow_calls;
    const int gained = max_flow(net).value - covered_units;
    if (gained <= 0) continue;
    double attach = 0.0;
    if (!team.empty()) {
      attach = kInf;
      for (UserId member : team) {
        attach = std::min(attach, dist.at(u, member));
      }
    }
    GreedyChoice choice{u, gained, attach};
    if (!best) {
      best = choice;
      continue;
    }
    bool better;
    if (team.empty()) {
      better = choice.units_gained > best->units_gained;
    } else {
      const double lhs = choice.attach_cost * best->units_gained;
      const double rhs = best->attach_cost * choice.units_gained;
      better = lhs < rhs - kDistTol ||
               (lhs <= rhs + kDistTol &&
                choice.attach_cost < best->attach_cost - kDistTol);
    }
    if (better) best = choice;
  }
  return best;
}

/// Greedy set-cover-style solver for the Steiner objective: repeatedly add
/// the most cost-effective user until the task is covered, then let the flow
/// oracle recompute the assignment over the chosen team and drop members it
/// leaves unloaded. A team with finite Steiner cost lives inside one
/// component, so the greedy runs per component and the cheapest result wins.
inline Solution solve_steiner(const SocialNetwork& network, const Task& task) {
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
  solution.solver = "steinersol";
  if (task.empty()) return finish(solution);

  ++flow_calls;
  if (!is_feasible(task, network.all_users(), network.users).first) {
    return finish(infeasible_solution(
        "steinersol",
        feasibility_deficit(task, network.all_users(), network.users)));
  }

  const auto dist = shortest_path_distances(network);
  const auto labels = component_labels(network);
  std::map<int, std::vector<UserId>> components;
  for (int u = 0; u < network.user_count(); ++u) {
    components[labels[u]].push_back(u);
  }

  const int total = task.total_units();
  std::optional<Solution> best;
  for (const auto& [label, members] : components) {
    ++flow_calls;
    if (!is_feasible(task, members, network.users).first) continue;

    std::vector<UserId> team;
    std::vector<TraceStep> trace;
    int covered = 0;
    while (covered < total) {
      const auto choice =
          greedy_step(task, network.users, dist, team, members, covered,
                      &flow_calls);
      if (!choice) break;  // cannot happen on a feasible component
      team.push_back(choice->user);
      std::sort(team.begin(), team.end());
      covered += choice->units_gained;
      trace.push_back({choice->user, choice->units_gained, choice->attach_cost});
    }
    if (covered < total) continue;

    // Flow extraction overrides the greedy's incremental bookkeeping; users
    // it leaves without units are dropped until the team is exactly the
    // loaded set.
    std::vector<UserId> final_team = team;
    Assignment assignment;
    while (true) {
      auto [feasible, extracted] = is_feasible(task, final_team, network.users);
      ++flow_calls;
      (void)feasible;
      assignment = std::move(*extracted);
      auto loaded = assignment.assigned_users();
      if (loaded == final_team) break;
      final_team = std::move(loaded);
    }

    const double cost = steiner_cost(dist, final_team);
    if (!best || cost < best->cost) {
      Solution cand;
      cand.solver = "steinersol";
      cand.team = final_team;
      cand.assignment = std::move(assignment);
      cand.cost = cost;
      cand.trace = std::move(trace);
      best = std::move(cand);
    }
  }

  if (!best) {
    // Feasible only across components: every covering team has infinite
    // Steiner cost.
    return finish(infeasible_solution("steinersol", 0, /*disconnected=*/true));
  }
  best->connectors = steiner_connectors(network, best->team);
  return finish(std::move(*best));
}

}  // namespace teamform

#endif  // TEAMFORM_STEINER_SOLVER_HPP
