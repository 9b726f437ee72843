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

// teamform CLI. Exit codes: 0 success, 1 invalid input, 2 infeasible task,
// 3 I/O error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "teamform/teamform.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitIo = 3;

teamform::SocialNetwork load_validated_network(const std::string& graph_path,
                                               const std::string& users_path) {
  teamform::SocialNetwork network =
      teamform::load_network(graph_path, users_path);
  const auto report = teamform::validate(network);
  if (!report.ok()) {
    std::ostringstream message;
    message << "invalid network:";
    for (const auto& violation : report.violations) {
      message << "\n  " << violation;
    }
    throw teamform::ParseError(message.str());
  }
  return network;
}

teamform::CostKind parse_kind(const std::string& name) {
  if (name == "diameter") return teamform::CostKind::kDiameter;
  if (name == "steiner") return teamform::CostKind::kSteiner;
  throw teamform::ParseError("unknown cost model '" + name + "'");
}

std::vector<teamform::UserId> parse_id_list(const std::string& csv) {
  std::vector<teamform::UserId> ids;
  std::stringstream ss(csv);
  std::string part;
  while (std::getline(ss, part, ',')) {
    ids.push_back(std::stoi(part));
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

struct CommonPaths {
  std::string graph;
  std::string users;
  std::string task;
};

void add_instance_options(CLI::App* cmd, CommonPaths* paths) {
  cmd->add_option("--graph", paths->graph, "edge list file")->required();
  cmd->add_option("--users", paths->users, "user roster file")->required();
  cmd->add_option("--task", paths->task, "task requirements file")->required();
}

int run_solve(const CommonPaths& paths, const std::string& model_name,
              std::optional<double> alpha, std::optional<double> beta,
              bool with_stats) {
  const auto network = load_validated_network(paths.graph, paths.users);
  const auto task = teamform::load_task(paths.task);
  teamform::CostModel model;
  model.kind = parse_kind(model_name);
  if (alpha.has_value() != beta.has_value()) {
    throw teamform::ParseError("--alpha and --beta must be given together");
  }
  if (alpha) model = teamform::make_cost_model(model.kind, *alpha, *beta);
  const teamform::Solution solution = teamform::solve(network, task, model);
  std::cout << teamform::solution_to_json(solution, with_stats) << '\n';
  return solution.feasible ? kExitOk : kExitInfeasible;
}

int run_feasible(const CommonPaths& paths, const std::string& candidates_csv) {
  const auto network = load_validated_network(paths.graph, paths.users);
  const auto task = teamform::load_task(paths.task);
  std::vector<teamform::UserId> candidates = candidates_csv.empty()
                                                 ? network.all_users()
                                                 : parse_id_list(candidates_csv);
  for (teamform::UserId u : candidates) {
    if (!network.valid_user(u)) {
      throw teamform::ParseError("candidate id " + std::to_string(u) +
                                 " out of range");
    }
  }
  const auto [feasible, assignment] =
      teamform::is_feasible(task, candidates, network.users);
  if (!feasible) {
    std::cout << "INFEASIBLE deficit="
              << teamform::feasibility_deficit(task, candidates, network.users)
              << '\n';
    return kExitOk;
  }
  nlohmann::ordered_json j;
  j["assignment"] = teamform::assignment_to_json(*assignment);
  std::cout << "FEASIBLE\n" << j.dump() << '\n';
  return kExitOk;
}

int run_oracle(const CommonPaths& paths, const std::string& model_name,
               int max_team_size) {
  const auto network = load_validated_network(paths.graph, paths.users);
  const auto task = teamform::load_task(paths.task);
  if (model_name == "feasible") {
    const bool ok =
        teamform::exact_feasible(task, network.all_users(), network.users);
    std::cout << (ok ? "FEASIBLE" : "INFEASIBLE") << '\n';
    return kExitOk;
  }
  const teamform::CostKind kind = parse_kind(model_name);
  const auto result =
      kind == teamform::CostKind::kDiameter
          ? teamform::exact_min_diameter(network, task, max_team_size)
          : teamform::exact_min_steiner(network, task, max_team_size);
  const std::string label = "oracle-" + model_name;
  if (!result) {
    const auto solution = teamform::infeasible_solution(
        label,
        teamform::feasibility_deficit(task, network.all_users(), network.users));
    std::cout << teamform::solution_to_json(solution) << '\n';
    return kExitInfeasible;
  }
  teamform::Solution solution;
  solution.solver = label;
  solution.team = result->team;
  solution.cost = result->cost;
  if (auto [ok, assignment] =
          teamform::is_feasible(task, result->team, network.users);
      ok) {
    solution.assignment = std::move(*assignment);
  }
  std::cout << teamform::solution_to_json(solution) << '\n';
  return kExitOk;
}

int run_gen(const std::string& spec_path, const std::string& out_prefix) {
  auto in = std::ifstream(spec_path);
  if (!in) throw teamform::IoError("cannot open '" + spec_path + "'");
  const auto blocks = teamform::parse_bench_spec(in);
  const auto parent = std::filesystem::path(out_prefix).parent_path();
  std::error_code ec;
  if (!parent.empty()) std::filesystem::create_directories(parent, ec);
  int index = 0;
  for (const auto& block : blocks) {
    for (int rep = 0; rep < block.count; ++rep, ++index) {
      teamform::GeneratorSpec spec = block.spec;
      spec.seed = block.spec.seed + static_cast<std::uint64_t>(rep);
      const auto instance = teamform::generate(spec);
      char suffix[16];
      std::snprintf(suffix, sizeof(suffix), "%03d", index);
      const std::string stem = out_prefix + suffix;
      teamform::save_network(instance.network, stem + ".graph", stem + ".users");
      teamform::save_task(instance.task, stem + ".task");
      std::cout << stem << ".{graph,users,task}\n";
    }
  }
  return kExitOk;
}

int run_bench(const std::string& spec_path, const std::string& out_path,
              bool deterministic, const std::string& solvers_csv) {
  auto in = std::ifstream(spec_path);
  if (!in) throw teamform::IoError("cannot open '" + spec_path + "'");
  const auto blocks = teamform::parse_bench_spec(in);
  teamform::BenchOptions options;
  options.record_time = !deterministic;
  if (!solvers_csv.empty()) {
    options.solvers.clear();
    std::stringstream ss(solvers_csv);
    std::string part;
    while (std::getline(ss, part, ',')) options.solvers.push_back(part);
  }
  teamform::run_experiments_to_file(blocks, options, out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"capacitated team formation on social networks"};
  app.require_subcommand(1);

  CommonPaths solve_paths;
  std::string solve_model;
  std::optional<double> alpha, beta;
  bool with_stats = false;
  auto* solve_cmd =
      app.add_subcommand("solve", "find a feasible team minimizing the cost");
  add_instance_options(solve_cmd, &solve_paths);
  solve_cmd->add_option("--model", solve_model, "diameter or steiner")->required();
  solve_cmd->add_option("--alpha", alpha, "price weight (with --beta)");
  solve_cmd->add_option("--beta", beta, "social cost weight (with --alpha)");
  solve_cmd->add_flag("--stats", with_stats, "include flow_calls and wall time");

  CommonPaths feasible_paths;
  std::string candidates_csv;
  auto* feasible_cmd = app.add_subcommand(
      "feasible", "check whether a candidate set can cover the task");
  add_instance_options(feasible_cmd, &feasible_paths);
  feasible_cmd->add_option("--candidates", candidates_csv,
                           "comma-separated user ids (default: all)");

  CommonPaths oracle_paths;
  std::string oracle_model;
  int max_team_size = 0;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "exact brute-force solver for desk-scale checks");
  add_instance_options(oracle_cmd, &oracle_paths);
  oracle_cmd->add_option("--model", oracle_model,
                         "diameter, steiner, or feasible")->required();
  oracle_cmd->add_option("--max-team-size", max_team_size,
                         "subset size cap (default: total task units)");

  std::string gen_spec, gen_prefix;
  auto* gen_cmd =
      app.add_subcommand("gen", "dump synthetic instances in the file formats");
  gen_cmd->add_option("--spec", gen_spec, "bench spec file")->required();
  gen_cmd->add_option("--out-prefix", gen_prefix, "output path prefix")->required();

  std::string bench_spec, bench_out, bench_solvers;
  bool bench_deterministic = false;
  auto* bench_cmd =
      app.add_subcommand("bench", "run the solver comparison, write a CSV");
  bench_cmd->add_option("--spec", bench_spec, "bench spec file")->required();
  bench_cmd->add_option("--out", bench_out, "output CSV path")->required();
  bench_cmd->add_flag("--deterministic", bench_deterministic,
                      "zero the ms column for byte-reproducible output");
  bench_cmd->add_option("--solvers", bench_solvers,
                        "comma-separated subset of baseline,diamsol,steinersol");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (solve_cmd->parsed()) {
      return run_solve(solve_paths, solve_model, alpha, beta, with_stats);
    }
    if (feasible_cmd->parsed()) {
      return run_feasible(feasible_paths, candidates_csv);
    }
    if (oracle_cmd->parsed()) {
      return run_oracle(oracle_paths, oracle_model, max_team_size);
    }
    if (gen_cmd->parsed()) {
      return run_gen(gen_spec, gen_prefix);
    }
    if (bench_cmd->parsed()) {
      return run_bench(bench_spec, bench_out, bench_deterministic, bench_solvers);
    }
  } catch (const teamform::IoError& e) {
    std::cerr << "teamform: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "teamform: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
