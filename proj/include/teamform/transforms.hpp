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

#ifndef TEAMFORM_TRANSFORMS_HPP
#define TEAMFORM_TRANSFORMS_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "teamform/costs.hpp"
#include "teamform/diameter_solver.hpp"
#include "teamform/graph.hpp"
#include "teamform/steiner_solver.hpp"
#include "teamform/task.hpp"

namespace teamform {

/// Result of the price-on-users rewrite. The transformed graph has the n
/// original nodes (stripped to pure relays: no skills, capacity 0) plus n
/// shadow nodes n..2n-1 holding the skills and capacities, each hung off its
/// original by a pendant edge of weight alpha * price. Original edge weights
/// are scaled by beta. Shadow prices are 0 so the price is encoded exactly
/// once, in the pendant edge.
struct PricedTransform {
  SocialNetwork transformed;
  std::vector<UserId> shadow_of;  // original id -> shadow id
  SocialNetwork original;         // kept verbatim for exact inversion
  double alpha = 1.0;
  double beta = 1.0;

  UserId original_of(UserId shadow) const {
    return shadow - original.user_count();
  }
  bool is_shadow(UserId u) const { return u >= original.user_count(); }
};

inline PricedTransform apply_price_transform(const SocialNetwork& network,
                                             double alpha, double beta) {
  if (alpha <= 0.0 || beta <= 0.0) {
    throw std::invalid_argument("price transform: alpha and beta must be > 0");
  }
  PricedTransform result;
  result.original = network;
  result.alpha = alpha;
  result.beta = beta;
  const int n = network.user_count();
  result.transformed.users.reserve(2 * n);
  result.shadow_of.resize(n);
  for (int u = 0; u < n; ++u) {
    User relay = network.users[u];
    relay.skills.clear();
    relay.capacity = 0;
    result.transformed.users.push_back(std::move(relay));
  }
  for (int u = 0; u < n; ++u) {
    User shadow = network.users[u];
    shadow.id = n + u;
    shadow.price = 0.0;
    result.shadow_of[u] = n + u;
    result.transformed.users.push_back(std::move(shadow));
  }
  result.transformed.edges.reserve(network.edges.size() + n);
  for (const Edge& e : network.edges) {
    result.transformed.edges.push_back({e.u, e.v, beta * e.weight});
  }
  for (int u = 0; u < n; ++u) {
    result.transformed.edges.push_back(
        {u, n + u, alpha * network.users[u].price});
  }
  return result;
}

/// Exact inverse of apply_price_transform. The transform keeps the input
/// network verbatim, so inversion is lossless even where dividing the scaled
/// weights by beta would reintroduce floating-point rounding.
inline SocialNetwork invert_price_transform(const PricedTransform& transform) {
  return transform.original;
}

namespace detail {

inline UserId map_back(const PricedTransform& t, UserId node) {
  return t.is_shadow(node) ? t.original_of(node) : node;
}

}  // namespace detail

/// Runs the selected solver on the price-transformed graph and maps the team
/// back to original user ids. `cost` is the solver's objective on the
/// transformed graph; `priced_cost` is the direct alpha/beta reading of the
/// returned team on the original graph. For the Steiner kind the two agree
/// on two-user teams by construction; for the diameter kind interior team
/// members' pendant edges do not enter the max pairwise distance, so the two
/// readings are both reported rather than reconciled.
inline Solution solve_priced(const SocialNetwork& network, const Task& task,
                             const CostModel& model) {
  if (!model.pricing) {
    throw std::invalid_argument("solve_priced: cost model carries no pricing");
  }
  const auto transform =
      apply_price_transform(network, model.pricing->alpha, model.pricing->beta);
  Solution solution = model.kind == CostKind::kDiameter
                          ? solve_diameter(transform.transformed, task)
                          : solve_steiner(transform.transformed, task);
  solution.solver += "-priced";
  if (!solution.feasible) return solution;

  for (UserId& u : solution.team) u = detail::map_back(transform, u);
  std::sort(solution.team.begin(), solution.team.end());
  Assignment mapped;
  for (const auto& [key, units] : solution.assignment.alloc) {
    mapped.add(key.first, detail::map_back(transform, key.second), units);
  }
  solution.assignment = std::move(mapped);
  for (TraceStep& step : solution.trace) {
    step.user = detail::map_back(transform, step.user);
  }
  std::vector<UserId> connectors;
  for (UserId c : solution.connectors) {
    const UserId mapped_c = detail::map_back(transform, c);
    if (!std::count(solution.team.begin(), solution.team.end(), mapped_c)) {
      connectors.push_back(mapped_c);
    }
  }
  std::sort(connectors.begin(), connectors.end());
  connectors.erase(std::unique(connectors.begin(), connectors.end()),
                   connectors.end());
  solution.connectors = std::move(connectors);
  solution.priced_cost = priced_cost(network, solution.team, model);
  return solution;
}

/// Multi-unit tasks need no rewrite: the flow network already carries the
/// n_i capacities, so this is the same code path as the base solvers (2x for
/// the diameter objective, O(log k * total units) for the Steiner one).
inline Solution solve_multiunit(const SocialNetwork& network, const Task& task,
                                const CostModel& model) {
  return model.kind == CostKind::kDiameter ? solve_diameter(network, task)
                                           : solve_steiner(network, task);
}

/// Front door used by the CLI: dispatches on pricing presence and cost kind.
inline Solution solve(const SocialNetwork& network, const Task& task,
                      const CostModel& model) {
  if (model.pricing) return solve_priced(network, task, model);
  return solve_multiunit(network, task, model);
}

}  // namespace teamform

#endif  // TEAMFORM_TRANSFORMS_HPP
