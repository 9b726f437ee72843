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

// Exact brute-force solvers for desk-scale verification. Hard size caps are
// errors, not warnings: these routines are ground truth for tests and must
// never silently run for hours.

#ifndef TEAMFORM_ORACLE_HPP
#define TEAMFORM_ORACLE_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "teamform/costs.hpp"
#include "teamform/feasibility.hpp"
#include "teamform/graph.hpp"
#include "teamform/task.hpp"

namespace teamform {

namespace detail {

// Distributes the units of requirements[req_index..] over qualified
// candidates with capacity tracking. Units of one item are handed out in
// nondecreasing candidate order so each split is enumerated once.
inline bool allocate_units(const Task& task,
                           const std::vector<UserId>& candidates,
                           const std::vector<User>& users, int req_index,
                           int units_left, int min_candidate,
                           std::vector<int>& remaining_cap) {
  if (req_index == task.distinct_items()) return true;
  const Requirement& req = task.requirements[req_index];
  if (units_left == 0) {
    // Cheap logical prune: a later item whose qualified candidates cannot
    // absorb its demand dooms every completion of this branch.
    for (int r = req_index + 1; r < task.distinct_items(); ++r) {
      int absorbable = 0;
      for (std::size_t j = 0; j < candidates.size(); ++j) {
        if (users[candidates[j]].has_skill(task.requirements[r].item)) {
          absorbable += remaining_cap[j];
        }
      }
      if (absorbable < task.requirements[r].units) return false;
    }
    return allocate_units(task, candidates, users, req_index + 1,
                          req_index + 1 < task.distinct_items()
                              ? task.requirements[req_index + 1].units
                              : 0,
                          0, remaining_cap);
  }
  for (std::size_t j = min_candidate; j < candidates.size(); ++j) {
    if (remaining_cap[j] == 0) continue;
    if (!users[candidates[j]].has_skill(req.item)) continue;
    const int take = std::min(remaining_cap[j], units_left);
    for (int give = take; give >= 1; --give) {
      remaining_cap[j] -= give;
      if (allocate_units(task, candidates, users, req_index, units_left - give,
                         static_cast<int>(j) + 1, remaining_cap)) {
        remaining_cap[j] += give;
        return true;
      }
      remaining_cap[j] += give;
    }
  }
  return false;
}

}  // namespace detail

/// Exhaustive feasibility check, independent of the flow machinery: searches
/// over all ways of allocating each required unit to a qualified candidate
/// with capacity tracking. Caps: total units <= 12, candidates <= 8.
inline bool exact_feasible(const Task& task,
                           const std::vector<UserId>& candidates,
                           const std::vector<User>& users) {
  if (task.total_units() > 12) {
    throw std::invalid_argument("exact_feasible: total units above cap 12");
  }
  if (candidates.size() > 8) {
    throw std::invalid_argument("exact_feasible: more than 8 candidates");
  }
  if (task.empty()) return true;
  std::vector<int> remaining_cap(candidates.size());
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    remaining_cap[j] = users[candidates[j]].capacity;
  }
  const int total_cap =
      std::accumulate(remaining_cap.begin(), remaining_cap.end(), 0);
  if (total_cap < task.total_units()) return false;
  return detail::allocate_units(task, candidates, users, 0,
                                task.requirements[0].units, 0, remaining_cap);
}

/// Exact minimum Steiner tree weight over the given terminals, allowing any
/// graph vertex as a relay (Dreyfus-Wagner dynamic program over terminal
/// subsets x vertices). +infinity when the terminals span components.
/// Caps: terminals <= 10.
inline double steiner_tree_exact(const DistanceMatrix& dist,
                                 std::vector<UserId> terminals) {
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()),
                  terminals.end());
  const int t = static_cast<int>(terminals.size());
  if (t > 10) {
    throw std::invalid_argument("steiner_tree_exact: more than 10 terminals");
  }
  if (t <= 1) return 0.0;
  const int n = dist.size();
  // dp[S][v] = cheapest tree connecting {terminals in S} plus vertex v.
  const int full = (1 << t) - 1;
  std::vector<std::vector<double>> dp(full + 1, std::vector<double>(n, kInf));
  for (int i = 0; i < t; ++i) {
    for (int v = 0; v < n; ++v) dp[1 << i][v] = dist.at(terminals[i], v);
  }
  for (int mask = 1; mask <= full; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;  // singletons initialized above
    auto& row = dp[mask];
    for (int sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
      if (sub < (mask ^ sub)) break;  // each split visited once
      const auto& a = dp[sub];
      const auto& b = dp[mask ^ sub];
      for (int v = 0; v < n; ++v) {
        const double merged = a[v] + b[v];
        if (merged < row[v]) row[v] = merged;
      }
    }
    // One metric relaxation pass: dist is a metric closure, so a single
    // min-plus round reaches every improvement.
    for (int v = 0; v < n; ++v) {
      double best = row[v];
      for (int u = 0; u < n; ++u) {
        const double cand = row[u] + dist.at(u, v);
        if (cand < best) best = cand;
      }
      row[v] = best;
    }
  }
  return dp[full ^ 1][terminals[0]];
}

inline double steiner_tree_exact(const SocialNetwork& network,
                                 const std::vector<UserId>& terminals) {
  return steiner_tree_exact(shortest_path_distances(network), terminals);
}

struct ExactResult {
  std::vector<UserId> team;
  double cost = 0.0;
};

namespace detail {

template <typename CostFn>
inline std::optional<ExactResult> exact_min_team(const SocialNetwork& network,
                                                 const Task& task,
                                                 int max_team_size,
                                                 CostFn&& team_cost) {
  const int n = network.user_count();
  if (n > 20) {
    throw std::invalid_argument("oracle: more than 20 users");
  }
  if (task.empty()) return ExactResult{{}, 0.0};
  if (max_team_size <= 0) {
    // Larger teams never help: dropping a user that carries no units keeps
    // feasibility, never raises the diameter, and never raises the exact
    // Steiner weight, so some optimum has every member carrying a unit.
    max_team_size = std::min(n, task.total_units());
  }
  max_team_size = std::min(max_team_size, n);
  std::optional<ExactResult> best;
  std::vector<UserId> subset;
  // Subsets in increasing size then lexicographic order; the first optimum
  // found wins ties, so results are deterministic.
  auto consider = [&](const std::vector<UserId>& team) {
    auto [feasible, assignment] = is_feasible(task, team, network.users);
    if (!feasible) return;
    const double cost = team_cost(team);
    if (!best || cost < best->cost) best = ExactResult{team, cost};
  };
  for (int size = 1; size <= max_team_size; ++size) {
    subset.assign(size, 0);
    std::iota(subset.begin(), subset.end(), 0);
    if (size > n) break;
    while (true) {
      consider(subset);
      int i = size - 1;
      while (i >= 0 && subset[i] == n - size + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return best;
}

}  // namespace detail

/// Minimum-diameter feasible team by subset enumeration. Absent when no
/// subset of size <= max_team_size covers the task (pass max_team_size <= 0
/// for the default bound of total task units).
inline std::optional<ExactResult> exact_min_diameter(
    const SocialNetwork& network, const Task& task, int max_team_size = 0) {
  const auto dist = shortest_path_distances(network);
  return detail::exact_min_team(
      network, task, max_team_size,
      [&](const std::vector<UserId>& team) { return diameter_cost(dist, team); });
}

/// Minimum exact-Steiner-cost feasible team: each feasible subset is scored
/// by its true optimal Steiner tree weight (relays allowed anywhere in the
/// graph), not the metric-MST surrogate.
inline std::optional<ExactResult> exact_min_steiner(
    const SocialNetwork& network, const Task& task, int max_team_size = 0) {
  const auto dist = shortest_path_distances(network);
  if (max_team_size <= 0) {
    max_team_size = std::min(network.user_count(), task.total_units());
  }
  if (max_team_size > 10) {
    throw std::invalid_argument(
        "exact_min_steiner: subsets above 10 terminals");
  }
  return detail::exact_min_team(
      network, task, max_team_size, [&](const std::vector<UserId>& team) {
        return steiner_tree_exact(dist, team);
      });
}

}  // namespace teamform

#endif  // TEAMFORM_ORACLE_HPP
