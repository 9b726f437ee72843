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

#ifndef TEAMFORM_DIAMETER_SOLVER_HPP
#define TEAMFORM_DIAMETER_SOLVER_HPP

#include <algorithm>
#include <chrono>
#include <optional>
#include <utility>
#include <vector>

#include "teamform/costs.hpp"
#include "teamform/feasibility.hpp"
#include "teamform/graph.hpp"
#include "teamform/task.hpp"

namespace teamform {

/// Sorted distinct finite pairwise distances, always including 0: the search
/// grid for the anchor-ball procedure. Any team's diameter is one of these
/// values.
inline std::vector<double> candidate_radii(const DistanceMatrix& dist) {
  std::vector<double> radii{0.0};
  for (int u = 0; u < dist.size(); ++u) {
    for (int v = u + 1; v < dist.size(); ++v) {
      const double d = dist.at(u, v);
      if (d < kInf) radii.push_back(d);
    }
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

inline std::vector<double> candidate_radii(const SocialNetwork& network) {
  return candidate_radii(shortest_path_distances(network));
}

/// All users within shortest-path distance radius (plus tolerance) of the
/// anchor, the anchor included.
inline std::vector<UserId> ball(const DistanceMatrix& dist, UserId anchor,
                                double radius) {
  std::vector<UserId> members;
  for (int v = 0; v < dist.size(); ++v) {
    if (dist.at(anchor, v) <= radius + kDistTol) members.push_back(v);
  }
  return members;
}

inline std::vector<UserId> ball(const SocialNetwork& network, UserId anchor,
                                double radius) {
  if (radius < 0.0) throw std::invalid_argument("ball: negative radius");
  return ball(shortest_path_distances(network, {anchor}), anchor, radius);
}

/// Anchor-ball 2-approximation for the minimum-diameter feasible team.
///
/// Scans radii in ascending order and anchors in ascending id order, keeping
/// the first (radius, anchor) whose ball admits a covering assignment; the
/// reported team is the set of users the flow witness actually loads. The
/// optimal team lies inside a ball of radius OPT around any of its members
/// and any radius-r ball has diameter at most 2r, hence the factor 2. Per
/// anchor the scan is realized as a binary search over the radius grid,
/// which is equivalent because ball feasibility is monotone in the radius.
inline Solution solve_diameter(const SocialNetwork& network, const Task& task) {
  const auto started = std::chrono::steady_clock::now();
  Solution solution;
  solution.solver = "diamsol";
  std::int64_t flow_calls = 0;
  auto finish = [&](Solution s) {
    s.stats.flow_calls = flow_calls;
    s.stats.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - started)
                          .count();
    return s;
  };
  if (task.empty()) return finish(solution);

  const auto feasible_in = [&](const std::vector<UserId>& candidates) {
    ++flow_calls;
    return is_feasible(task, candidates, network.users).first;
  };

  if (!feasible_in(network.all_users())) {
    return finish(infeasible_solution(
        "diamsol", feasibility_deficit(task, network.all_users(), network.users)));
  }

  const auto dist = shortest_path_distances(network);
  const auto radii = candidate_radii(dist);
  const int r_count = static_cast<int>(radii.size());

  int best_radius = -1;
  UserId best_anchor = -1;
  for (UserId anchor = 0; anchor < network.user_count(); ++anchor) {
    // Only radii strictly below the incumbent can still win; anchors tie-break
    // in ascending id order, so an equal radius never replaces the incumbent.
    int hi = (best_radius == -1) ? r_count - 1 : best_radius - 1;
    if (hi < 0) break;
    if (!feasible_in(ball(dist, anchor, radii[hi]))) continue;
    int lo = 0;
    while (lo < hi) {
      const int mid = (lo + hi) / 2;
      if (feasible_in(ball(dist, anchor, radii[mid]))) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    best_radius = lo;
    best_anchor = anchor;
  }

  if (best_radius == -1) {
    // Coverage needs users from more than one component; every such team has
    // infinite diameter.
    Solution s = infeasible_solution("diamsol", 0, /*disconnected=*/true);
    return finish(s);
  }

  auto [feasible, assignment] =
      is_feasible(task, ball(dist, best_anchor, radii[best_radius]), network.users);
  ++flow_calls;
  (void)feasible;
  solution.assignment = std::move(*assignment);
  solution.team = solution.assignment.assigned_users();
  solution.cost = solution.team.empty() ? 0.0 : diameter_cost(dist, solution.team);
  return finish(solution);
}

}  // namespace teamform

#endif  // TEAMFORM_DIAMETER_SOLVER_HPP
