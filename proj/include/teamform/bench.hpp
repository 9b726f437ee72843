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

// Experiment runner. A bench spec file is a sequence of key=value blocks
// separated by blank lines; '#' starts a comment. Each block describes one
// instance group:
//
//   kind=uniform|powerlaw|grid   n=30        density=0.2
//   exponent=2.5  avg_degree=4  weights=unit|uniform
//   items=8  k=3  units=1..2  skills=1..3  cap=1..2  price=0..1
//   seed=42  count=10  model=diameter|steiner
//
// count instances are generated with seeds seed, seed+1, ... The CSV output
// has the fixed header instance,seed,n,k,total_units,solver,cost,feasible,
// flow_calls,ms with rows sorted by (instance, solver).

#ifndef TEAMFORM_BENCH_HPP
#define TEAMFORM_BENCH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "teamform/baseline.hpp"
#include "teamform/diameter_solver.hpp"
#include "teamform/generator.hpp"
#include "teamform/io.hpp"
#include "teamform/steiner_solver.hpp"

namespace teamform {

struct BenchBlock {
  GeneratorSpec spec;
  int count = 1;
  CostKind model = CostKind::kDiameter;
};

namespace detail {

inline IntRange parse_int_range(const std::string& value, int line_no) {
  const auto sep = value.find("..");
  if (sep == std::string::npos) {
    const int v = parse_int(value, line_no, "range");
    return {v, v};
  }
  IntRange range{parse_int(value.substr(0, sep), line_no, "range"),
                 parse_int(value.substr(sep + 2), line_no, "range")};
  if (range.lo > range.hi) {
    throw ParseError("line " + std::to_string(line_no) + ": empty range '" +
                     value + "'");
  }
  return range;
}

inline RealRange parse_real_range(const std::string& value, int line_no) {
  const auto sep = value.find("..");
  if (sep == std::string::npos) {
    const double v = parse_double(value, line_no, "range");
    return {v, v};
  }
  RealRange range{parse_double(value.substr(0, sep), line_no, "range"),
                  parse_double(value.substr(sep + 2), line_no, "range")};
  if (range.lo > range.hi) {
    throw ParseError("line " + std::to_string(line_no) + ": empty range '" +
                     value + "'");
  }
  return range;
}

}  // namespace detail

inline std::vector<BenchBlock> parse_bench_spec(std::istream& in) {
  std::vector<BenchBlock> blocks;
  BenchBlock current;
  bool open = false;
  std::string line;
  int line_no = 0;
  auto flush = [&] {
    if (open) blocks.push_back(current);
    current = BenchBlock{};
    open = false;
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const bool blank =
        std::all_of(line.begin(), line.end(),
                    [](unsigned char c) { return std::isspace(c); });
    if (blank) {
      flush();
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    open = true;
    GeneratorSpec& spec = current.spec;
    if (key == "kind") {
      if (value == "uniform") {
        spec.kind = GraphKind::kUniformRandom;
      } else if (value == "powerlaw") {
        spec.kind = GraphKind::kPowerLaw;
      } else if (value == "grid") {
        spec.kind = GraphKind::kGrid;
      } else {
        throw ParseError("line " + std::to_string(line_no) +
                         ": unknown kind '" + value + "'");
      }
    } else if (key == "n") {
      spec.n = detail::parse_int(value, line_no, "n");
    } else if (key == "density") {
      spec.edge_density = detail::parse_double(value, line_no, "density");
    } else if (key == "exponent") {
      spec.degree_exponent = detail::parse_double(value, line_no, "exponent");
    } else if (key == "avg_degree") {
      spec.avg_degree = detail::parse_double(value, line_no, "avg_degree");
    } else if (key == "weights") {
      if (value == "unit") {
        spec.weights = WeightKind::kUnit;
      } else if (value == "uniform") {
        spec.weights = WeightKind::kUniform01;
      } else {
        throw ParseError("line " + std::to_string(line_no) +
                         ": unknown weights '" + value + "'");
      }
    } else if (key == "items") {
      spec.item_universe = detail::parse_int(value, line_no, "items");
    } else if (key == "k") {
      spec.task_items = detail::parse_int(value, line_no, "k");
    } else if (key == "units") {
      spec.units = detail::parse_int_range(value, line_no);
    } else if (key == "skills") {
      spec.skills_per_user = detail::parse_int_range(value, line_no);
    } else if (key == "cap") {
      spec.capacity = detail::parse_int_range(value, line_no);
    } else if (key == "price") {
      spec.price = detail::parse_real_range(value, line_no);
    } else if (key == "seed") {
      spec.seed = static_cast<std::uint64_t>(
          detail::parse_int(value, line_no, "seed"));
    } else if (key == "count") {
      current.count = detail::parse_int(value, line_no, "count");
    } else if (key == "model") {
      if (value == "diameter") {
        current.model = CostKind::kDiameter;
      } else if (value == "steiner") {
        current.model = CostKind::kSteiner;
      } else {
        throw ParseError("line " + std::to_string(line_no) +
                         ": unknown model '" + value + "'");
      }
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" +
                       key + "'");
    }
  }
  flush();
  return blocks;
}

struct ExperimentRow {
  int instance = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int k = 0;
  int total_units = 0;
  std::string solver;
  double cost = 0.0;
  bool feasible = false;
  std::int64_t flow_calls = 0;
  std::int64_t ms = 0;
};

struct BenchOptions {
  // Wall time is the one nondeterministic column; switching it off pins the
  // whole CSV for reproducibility checks.
  bool record_time = true;
  std::vector<std::string> solvers = {"baseline", "diamsol", "steinersol"};
};

inline const std::string kCsvHeader =
    "instance,seed,n,k,total_units,solver,cost,feasible,flow_calls,ms";

inline std::string to_csv(const ExperimentRow& row) {
  std::ostringstream out;
  out << row.instance << ',' << row.seed << ',' << row.n << ',' << row.k << ','
      << row.total_units << ',' << row.solver << ','
      << (std::isinf(row.cost) ? std::string("inf") : format_double(row.cost))
      << ',' << (row.feasible ? 1 : 0) << ',' << row.flow_calls << ','
      << row.ms;
  return out.str();
}

/// Runs every requested solver on every generated instance and returns the
/// rows sorted by (instance, solver). Instances are numbered globally in
/// block order, with seeds seed..seed+count-1 within a block.
inline std::vector<ExperimentRow> run_experiments(
    const std::vector<BenchBlock>& blocks, const BenchOptions& options) {
  std::vector<std::string> solvers = options.solvers;
  std::sort(solvers.begin(), solvers.end());
  std::vector<ExperimentRow> rows;
  int instance_id = 0;
  for (const BenchBlock& block : blocks) {
    for (int rep = 0; rep < block.count; ++rep, ++instance_id) {
      GeneratorSpec spec = block.spec;
      spec.seed = block.spec.seed + static_cast<std::uint64_t>(rep);
      const Instance instance = generate(spec);
      for (const std::string& solver : solvers) {
        Solution solution;
        if (solver == "baseline") {
          solution =
              baseline_uncapacitated(instance.network, instance.task, block.model);
        } else if (solver == "diamsol") {
          solution = solve_diameter(instance.network, instance.task);
        } else if (solver == "steinersol") {
          solution = solve_steiner(instance.network, instance.task);
        } else {
          throw std::invalid_argument("bench: unknown solver '" + solver + "'");
        }
        ExperimentRow row;
        row.instance = instance_id;
        row.seed = spec.seed;
        row.n = spec.n;
        row.k = instance.task.distinct_items();
        row.total_units = instance.task.total_units();
        row.solver = solver;
        row.cost = solution.cost;
        row.feasible = solution.feasible;
        row.flow_calls = solution.stats.flow_calls;
        row.ms = options.record_time
                     ? static_cast<std::int64_t>(std::llround(solution.stats.wall_ms))
                     : 0;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

inline void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << kCsvHeader << '\n';
  for (const ExperimentRow& row : rows) out << to_csv(row) << '\n';
}

inline void run_experiments_to_file(const std::vector<BenchBlock>& blocks,
                                    const BenchOptions& options,
                                    const std::string& out_path) {
  const auto rows = run_experiments(blocks, options);
  auto out = detail::open_output(out_path);
  write_csv(out, rows);
  if (!out) throw IoError("failed writing '" + out_path + "'");
}

}  // namespace teamform

#endif  // TEAMFORM_BENCH_HPP
