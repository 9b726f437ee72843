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

#ifndef TEAMFORM_TASK_HPP
#define TEAMFORM_TASK_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "teamform/graph.hpp"

namespace teamform {

struct Requirement {
  ItemId item = 0;
  int units = 1;
};

/// A task is a multiset of required items: distinct item ids, each with a
/// positive unit count. Requirements are kept sorted by item id.
struct Task {
  std::vector<Requirement> requirements;

  int distinct_items() const { return static_cast<int>(requirements.size()); }

  int total_units() const {
    return std::accumulate(requirements.begin(), requirements.end(), 0,
                           [](int acc, const Requirement& r) { return acc + r.units; });
  }

  bool empty() const { return requirements.empty(); }

  bool unit_demand() const {
    return std::all_of(requirements.begin(), requirements.end(),
                       [](const Requirement& r) { return r.units == 1; });
  }

  int units_of(ItemId item) const {
    auto it = std::lower_bound(
        requirements.begin(), requirements.end(), item,
        [](const Requirement& r, ItemId i) { return r.item < i; });
    return (it != requirements.end() && it->item == item) ? it->units : 0;
  }
};

/// Builds a normalized Task: requirements sorted by item id. Throws on
/// duplicate items, negative item ids, or non-positive unit counts.
inline Task make_task(std::vector<Requirement> requirements) {
  std::sort(requirements.begin(), requirements.end(),
            [](const Requirement& a, const Requirement& b) { return a.item < b.item; });
  for (std::size_t i = 0; i < requirements.size(); ++i) {
    if (requirements[i].item < 0) {
      throw std::invalid_argument("task: negative item id");
    }
    if (requirements[i].units < 1) {
      throw std::invalid_argument("task: units must be >= 1 for item " +
                                  std::to_string(requirements[i].item));
    }
    if (i > 0 && requirements[i].item == requirements[i - 1].item) {
      throw std::invalid_argument("task: duplicate item " +
                                  std::to_string(requirements[i].item));
    }
  }
  return Task{std::move(requirements)};
}

/// Item -> user -> units map realizing a task. Only positive unit counts are
/// stored. Ordered keys make iteration (and serialization) deterministic.
struct Assignment {
  std::map<std::pair<ItemId, UserId>, int> alloc;

  bool empty() const { return alloc.empty(); }

  void add(ItemId item, UserId user, int units) {
    if (units > 0) alloc[{item, user}] += units;
  }

  int load_of(UserId user) const {
    int load = 0;
    for (const auto& [key, units] : alloc) {
      if (key.second == user) load += units;
    }
    return load;
  }

  int covered_units(ItemId item) const {
    int covered = 0;
    for (const auto& [key, units] : alloc) {
      if (key.first == item) covered += units;
    }
    return covered;
  }

  /// Sorted, duplicate-free list of users carrying at least one unit.
  std::vector<UserId> assigned_users() const {
    std::vector<UserId> users;
    for (const auto& [key, units] : alloc) users.push_back(key.second);
    std::sort(users.begin(), users.end());
    users.erase(std::unique(users.begin(), users.end()), users.end());
    return users;
  }
};

enum class CostKind { kDiameter, kSteiner };

inline std::string to_string(CostKind kind) {
  return kind == CostKind::kDiameter ? "diameter" : "steiner";
}

struct Pricing {
  double alpha = 1.0;
  double beta = 1.0;
};

/// Which social collaboration cost f(U) to minimize, optionally combined
/// with per-user prices as alpha * sum(prices) + beta * f(U).
struct CostModel {
  CostKind kind = CostKind::kDiameter;
  std::optional<Pricing> pricing;
};

inline CostModel make_cost_model(CostKind kind, double alpha, double beta) {
  if (alpha <= 0.0 || beta <= 0.0) {
    throw std::invalid_argument("cost model: alpha and beta must be > 0");
  }
  return CostModel{kind, Pricing{alpha, beta}};
}

/// One step of the cost-effectiveness greedy: which user was added, how many
/// additional units they absorbed, and the distance at which they attached
/// to the team built so far.
struct TraceStep {
  UserId user = 0;
  int units = 0;
  double attach_cost = 0.0;
};

struct SolveStats {
  std::int64_t flow_calls = 0;
  double wall_ms = 0.0;
};

/// Solver output. `team` always equals the set of users carrying at least
/// one assigned unit; Steiner relay vertices are reported separately in
/// `connectors`. An infeasible instance yields feasible = false together
/// with the unit shortfall (deficit), or disconnected = true when coverage
/// is only possible by mixing users from different components.
struct Solution {
  std::vector<UserId> team;
  Assignment assignment;
  double cost = 0.0;
  std::string solver;
  bool feasible = true;
  int deficit = 0;
  bool disconnected = false;
  std::vector<UserId> connectors;
  std::vector<TraceStep> trace;
  std::optional<double> priced_cost;  // direct reading on the original graph
  SolveStats stats;
};

inline Solution infeasible_solution(std::string solver, int deficit,
                                    bool disconnected = false) {
  Solution solution;
  solution.solver = std::move(solver);
  solution.cost = kInf;
  solution.feasible = false;
  solution.deficit = deficit;
  solution.disconnected = disconnected;
  return solution;
}

/// Checks an assignment against a task and user roster: every allocation
/// must be skill-backed, per-user loads must respect capacities, and every
/// required item must be covered by exactly its unit count. Violations are
/// reported with locations; an empty report means the assignment is valid.
inline ValidationReport check_assignment(const Task& task,
                                         const std::vector<User>& users,
                                         const Assignment& assignment) {
  ValidationReport report;
  const int n = static_cast<int>(users.size());
  std::map<UserId, int> load;
  std::map<ItemId, int> covered;
  for (const auto& [key, units] : assignment.alloc) {
    const auto [item, user] = key;
    const std::string where =
        "item " + std::to_string(item) + " -> user " + std::to_string(user);
    if (units <= 0) {
      report.add(where + ": non-positive units");
      continue;
    }
    if (user < 0 || user >= n) {
      report.add(where + ": unknown user");
      continue;
    }
    if (task.units_of(item) == 0) {
      report.add(where + ": item not required by the task");
    }
    if (!users[user].has_skill(item)) {
      report.add(where + ": user lacks the skill");
    }
    load[user] += units;
    covered[item] += units;
  }
  for (const auto& [user, total] : load) {
    if (user >= 0 && user < n && total > users[user].capacity) {
      report.add("user " + std::to_string(user) + " loaded with " +
                 std::to_string(total) + " units, capacity " +
                 std::to_string(users[user].capacity));
    }
  }
  for (const Requirement& req : task.requirements) {
    const int got = covered.count(req.item) ? covered.at(req.item) : 0;
    if (got != req.units) {
      report.add("item " + std::to_string(req.item) + " covered with " +
                 std::to_string(got) + " units, required " +
                 std::to_string(req.units));
    }
  }
  return report;
}

}  // namespace teamform

#endif  // TEAMFORM_TASK_HPP
