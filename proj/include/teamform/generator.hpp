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

#ifndef TEAMFORM_GENERATOR_HPP
#define TEAMFORM_GENERATOR_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "teamform/feasibility.hpp"
#include "teamform/graph.hpp"
#include "teamform/rng.hpp"
#include "teamform/task.hpp"

namespace teamform {

enum class GraphKind { kUniformRandom, kPowerLaw, kGrid };
enum class WeightKind { kUnit, kUniform01 };

struct IntRange {
  int lo = 1;
  int hi = 1;
};

struct RealRange {
  double lo = 0.0;
  double hi = 0.0;
};

/// Fully seeded synthetic instance recipe: a seed determines the network,
/// the user profiles, and the task, byte for byte.
struct GeneratorSpec {
  GraphKind kind = GraphKind::kUniformRandom;
  int n = 1;
  double edge_density = 0.1;     // uniform-random kind
  double degree_exponent = 2.5;  // power-law kind, > 2
  double avg_degree = 4.0;       // power-law kind, expected mean degree
  WeightKind weights = WeightKind::kUnit;
  int item_universe = 4;         // m
  IntRange skills_per_user{1, 2};
  IntRange capacity{1, 2};
  RealRange price{0.0, 0.0};
  int task_items = 2;            // k, <= item_universe
  IntRange units{1, 1};
  std::uint64_t seed = 0;
};

struct Instance {
  SocialNetwork network;
  Task task;
};

struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline double edge_weight(Rng& rng, WeightKind kind) {
  return kind == WeightKind::kUnit ? 1.0 : rng.uniform_pos();
}

inline void generate_edges(const GeneratorSpec& spec, Rng& rng,
                           SocialNetwork& network) {
  switch (spec.kind) {
    case GraphKind::kUniformRandom: {
      for (int u = 0; u < spec.n; ++u) {
        for (int v = u + 1; v < spec.n; ++v) {
          if (rng.bernoulli(spec.edge_density)) {
            network.edges.push_back({u, v, edge_weight(rng, spec.weights)});
          }
        }
      }
      break;
    }
    case GraphKind::kPowerLaw: {
      // Chung-Lu style: expected degree of node v follows a power law with
      // the configured exponent, scaled to the requested mean degree.
      std::vector<double> share(spec.n);
      double sum = 0.0;
      const double tail = -1.0 / (spec.degree_exponent - 1.0);
      for (int v = 0; v < spec.n; ++v) {
        share[v] = std::pow(v + 1.0, tail);
        sum += share[v];
      }
      const double total_degree = spec.avg_degree * spec.n;
      for (double& s : share) s *= total_degree / sum;
      for (int u = 0; u < spec.n; ++u) {
        for (int v = u + 1; v < spec.n; ++v) {
          const double p = std::min(1.0, share[u] * share[v] / total_degree);
          if (rng.bernoulli(p)) {
            network.edges.push_back({u, v, edge_weight(rng, spec.weights)});
          }
        }
      }
      break;
    }
    case GraphKind::kGrid: {
      const int rows = std::max(1, static_cast<int>(std::floor(std::sqrt(
                                       static_cast<double>(spec.n)))));
      const int cols = (spec.n + rows - 1) / rows;
      auto node = [&](int r, int c) { return r * cols + c; };
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          const int id = node(r, c);
          if (id >= spec.n) continue;
          if (c + 1 < cols && node(r, c + 1) < spec.n) {
            network.edges.push_back(
                {id, node(r, c + 1), edge_weight(rng, spec.weights)});
          }
          if (r + 1 < rows && node(r + 1, c) < spec.n) {
            network.edges.push_back(
                {id, node(r + 1, c), edge_weight(rng, spec.weights)});
          }
        }
      }
      break;
    }
  }
}

}  // namespace detail

/// Generates one instance. The draw order (edges, then per-user profiles,
/// then task attempts) is part of the format: identical specs produce
/// byte-identical instances. Tasks are rejection-sampled until feasible with
/// the full user set; after 100 failed attempts generation errors out.
inline Instance generate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw GenerationError("generator: n must be >= 1");
  if (spec.item_universe < 1) {
    throw GenerationError("generator: item universe must be >= 1");
  }
  if (spec.task_items > spec.item_universe) {
    throw GenerationError("generator: k exceeds the item universe");
  }
  Rng rng(spec.seed);
  Instance instance;
  instance.network.users.resize(spec.n);
  detail::generate_edges(spec, rng, instance.network);
  for (int u = 0; u < spec.n; ++u) {
    User& user = instance.network.users[u];
    user.id = u;
    const int skill_count =
        std::min(spec.item_universe,
                 rng.uniform_int(spec.skills_per_user.lo, spec.skills_per_user.hi));
    user.skills = rng.sample_distinct(skill_count, spec.item_universe);
    user.capacity = rng.uniform_int(spec.capacity.lo, spec.capacity.hi);
    user.price = rng.uniform_real(spec.price.lo, spec.price.hi);
  }
  const auto everyone = instance.network.all_users();
  for (int attempt = 0; attempt < 100; ++attempt) {
    const auto items = rng.sample_distinct(spec.task_items, spec.item_universe);
    std::vector<Requirement> reqs;
    reqs.reserve(items.size());
    for (int item : items) {
      reqs.push_back({item, rng.uniform_int(spec.units.lo, spec.units.hi)});
    }
    Task task = make_task(std::move(reqs));
    if (is_feasible(task, everyone, instance.network.users).first) {
      instance.task = std::move(task);
      return instance;
    }
  }
  throw GenerationError(
      "generator: no feasible task found in 100 attempts (seed " +
      std::to_string(spec.seed) + ")");
}

}  // namespace teamform

#endif  // TEAMFORM_GENERATOR_HPP
