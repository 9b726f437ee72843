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

// File formats and canonical serialization.
//
// Graph file:  one edge per line "u v w"; '#' starts a comment line.
// Users file:  one user per line "id capacity price skills" where skills is
//              a comma-separated item list or "-" when empty; the price
//              field may be omitted and defaults to 0.
// Task file:   one requirement per line "item units".
//
// Writers emit a canonical form (sorted, shortest round-trip decimals) so
// identical data always serializes to identical bytes.

#ifndef TEAMFORM_IO_HPP
#define TEAMFORM_IO_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "teamform/graph.hpp"
#include "teamform/task.hpp"

namespace teamform {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest decimal string that round-trips the value exactly.
inline std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

inline bool skip_line(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;  // blank
}

inline int parse_int(const std::string& tok, int line_no, const char* what) {
  int value = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad " + what +
                     " '" + tok + "'");
  }
  return value;
}

inline double parse_double(const std::string& tok, int line_no,
                           const char* what) {
  try {
    std::size_t used = 0;
    const double value = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": bad " + what +
                     " '" + tok + "'");
  }
}

}  // namespace detail

inline std::vector<Edge> read_edges(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::skip_line(line)) continue;
    const auto tokens = detail::split_ws(line);
    if (tokens.size() != 3) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'u v w'");
    }
    edges.push_back({detail::parse_int(tokens[0], line_no, "user id"),
                     detail::parse_int(tokens[1], line_no, "user id"),
                     detail::parse_double(tokens[2], line_no, "weight")});
  }
  return edges;
}

inline std::vector<User> read_users(std::istream& in) {
  std::vector<User> users;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::skip_line(line)) continue;
    const auto tokens = detail::split_ws(line);
    if (tokens.size() != 3 && tokens.size() != 4) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'id capacity [price] skills'");
    }
    User user;
    user.id = detail::parse_int(tokens[0], line_no, "user id");
    user.capacity = detail::parse_int(tokens[1], line_no, "capacity");
    const std::string& skills_tok = tokens.back();
    if (tokens.size() == 4) {
      user.price = detail::parse_double(tokens[2], line_no, "price");
    }
    if (skills_tok != "-") {
      std::stringstream ss(skills_tok);
      std::string part;
      while (std::getline(ss, part, ',')) {
        user.skills.push_back(detail::parse_int(part, line_no, "skill"));
      }
      std::sort(user.skills.begin(), user.skills.end());
      if (std::adjacent_find(user.skills.begin(), user.skills.end()) !=
          user.skills.end()) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": duplicate skill");
      }
    }
    users.push_back(std::move(user));
  }
  std::sort(users.begin(), users.end(),
            [](const User& a, const User& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < users.size(); ++i) {
    if (users[i].id != static_cast<int>(i)) {
      throw ParseError("user ids must be contiguous 0..n-1; missing or duplicate id " +
                       std::to_string(i));
    }
  }
  return users;
}

inline Task read_task(std::istream& in) {
  std::vector<Requirement> reqs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::skip_line(line)) continue;
    const auto tokens = detail::split_ws(line);
    if (tokens.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'item units'");
    }
    reqs.push_back({detail::parse_int(tokens[0], line_no, "item id"),
                    detail::parse_int(tokens[1], line_no, "units")});
  }
  try {
    return make_task(std::move(reqs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline void write_edges(std::ostream& out, const SocialNetwork& network) {
  std::vector<Edge> edges = network.edges;
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (const Edge& e : edges) {
    out << e.u << ' ' << e.v << ' ' << format_double(e.weight) << '\n';
  }
}

inline void write_users(std::ostream& out, const std::vector<User>& users) {
  for (const User& user : users) {
    out << user.id << ' ' << user.capacity << ' ' << format_double(user.price)
        << ' ';
    if (user.skills.empty()) {
      out << '-';
    } else {
      for (std::size_t i = 0; i < user.skills.size(); ++i) {
        if (i > 0) out << ',';
        out << user.skills[i];
      }
    }
    out << '\n';
  }
}

inline void write_task(std::ostream& out, const Task& task) {
  for (const Requirement& req : task.requirements) {
    out << req.item << ' ' << req.units << '\n';
  }
}

namespace detail {

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace detail

inline SocialNetwork load_network(const std::string& graph_path,
                                  const std::string& users_path) {
  auto users_in = detail::open_input(users_path);
  auto graph_in = detail::open_input(graph_path);
  SocialNetwork network;
  try {
    network.users = read_users(users_in);
  } catch (const ParseError& e) {
    throw ParseError(users_path + ": " + e.what());
  }
  try {
    network.edges = read_edges(graph_in);
  } catch (const ParseError& e) {
    throw ParseError(graph_path + ": " + e.what());
  }
  return network;
}

inline Task load_task(const std::string& path) {
  auto in = detail::open_input(path);
  try {
    return read_task(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void save_network(const SocialNetwork& network,
                         const std::string& graph_path,
                         const std::string& users_path) {
  auto graph_out = detail::open_output(graph_path);
  write_edges(graph_out, network);
  auto users_out = detail::open_output(users_path);
  write_users(users_out, network.users);
}

inline void save_task(const Task& task, const std::string& path) {
  auto out = detail::open_output(path);
  write_task(out, task);
}

/// Canonical single-line JSON for a Solution. Key order is fixed (team,
/// assignment, cost, solver, feasible, then context-dependent fields) so
/// golden-file comparisons are byte-exact. Infinite costs serialize as the
/// string "inf". Stats are opt-in: wall time is not deterministic and stays
/// out of canonical output.
inline nlohmann::ordered_json assignment_to_json(const Assignment& assignment) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [key, units] : assignment.alloc) {
    arr.push_back({{"item", key.first}, {"user", key.second}, {"units", units}});
  }
  return arr;
}

inline std::string solution_to_json(const Solution& solution,
                                    bool with_stats = false) {
  nlohmann::ordered_json j;
  j["team"] = solution.team;
  j["assignment"] = assignment_to_json(solution.assignment);
  if (std::isinf(solution.cost)) {
    j["cost"] = "inf";
  } else {
    j["cost"] = solution.cost;
  }
  j["solver"] = solution.solver;
  j["feasible"] = solution.feasible;
  if (!solution.feasible) {
    j["deficit"] = solution.deficit;
    j["disconnected"] = solution.disconnected;
  }
  if (solution.solver.rfind("steinersol", 0) == 0) {
    j["connectors"] = solution.connectors;
    auto trace = nlohmann::ordered_json::array();
    for (const TraceStep& step : solution.trace) {
      trace.push_back({{"user", step.user},
                       {"units", step.units},
                       {"attach", step.attach_cost}});
    }
    j["trace"] = std::move(trace);
  }
  if (solution.priced_cost) {
    j["priced_cost"] = *solution.priced_cost;
  }
  if (with_stats) {
    j["stats"] = {{"flow_calls", solution.stats.flow_calls},
                  {"ms", solution.stats.wall_ms}};
  }
  return j.dump();
}

}  // namespace teamform

#endif  // TEAMFORM_IO_HPP
