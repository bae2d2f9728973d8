// Copyright 2026 The gallai-paths Authors
//
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

// Command-line front end. Kept apart from the library so only the tool and
// its tests pull in CLI11.
#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gallai/gallai.hpp"

namespace gallai::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kInputError = 2, kBudget = 3 };

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

inline std::string slurp(const std::string& path, std::istream& stdin_) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << stdin_.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline std::vector<Graph> read_graphs(const std::string& text, const std::string& format) {
  if (format == "edgelist") return {parse_edgelist(text)};
  std::istringstream in(text);
  return read_graph6_stream(in);
}

inline std::vector<Graph> internal_graphs(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= max_n; ++n) {
    auto level = enumerate_connected(n, 5);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

inline nlohmann::json paths_json(const PathDecomposition& d) {
  auto j = nlohmann::json::array();
  for (const auto& p : d.paths) j.push_back(p.vertices);
  return j;
}

inline int cmd_solve(const Streams& io, const std::string& input, const std::string& format,
                     const SolveOptions& opts, bool trace, bool json) {
  const auto graphs = read_graphs(slurp(input, io.in), format);
  int code = kOk;
  nlohmann::json doc = nlohmann::json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    SolveResult res;
    try {
      res = solve(g, opts);
    } catch (const SolveFailure& e) {
      io.err << "graph " << i << ": " << e.what() << "\n" << e.trace.describe();
      code = std::max(code, static_cast<int>(kFailure));
      continue;
    }
    const auto bound = half_ceil(g.order());
    if (!res.verified) code = std::max(code, static_cast<int>(kFailure));
    if (json) {
      nlohmann::json steps = nlohmann::json::array();
      for (const auto& s : res.trace.steps) {
        steps.push_back({{"depth", s.depth}, {"order", s.order}, {"config", to_string(s.config)},
                         {"sub_case", to_string(s.sub_case)}});
      }
      nlohmann::json bases = nlohmann::json::array();
      for (const auto& b : res.trace.base_cases) {
        bases.push_back({{"depth", b.depth}, {"order", b.order}, {"kind", to_string(b.kind)},
                         {"target", b.target}});
      }
      doc.push_back({{"graph6", write_graph6(g)},
                     {"n", g.order()},
                     {"m", g.size()},
                     {"paths", paths_json(res.decomposition)},
                     {"size", res.decomposition.size()},
                     {"bound", bound},
                     {"verified", res.verified},
                     {"trace", {{"steps", steps}, {"base_cases", bases}}}});
      continue;
    }
    if (graphs.size() > 1) io.out << "# graph " << i << " " << write_graph6(g) << "\n";
    io.out << write_decomposition(res.decomposition);
    io.out << "# n=" << g.order() << " m=" << g.size() << " paths=" << res.decomposition.size()
           << " bound=" << bound << (res.verified ? " verified" : " FAILED") << "\n";
    if (trace) {
      std::istringstream lines(res.trace.describe());
      for (std::string l; std::getline(lines, l);) io.out << "# trace " << l << "\n";
    }
  }
  if (json) io.out << doc.dump(2) << "\n";
  return code;
}

inline int cmd_verify(const Streams& io, const std::string& graph_path, const std::string& decomp_path,
                      const std::string& format) {
  const auto graphs = read_graphs(slurp(graph_path, io.in), format);
  if (graphs.size() != 1) throw ParseError("verify expects exactly one graph");
  const auto d = parse_decomposition(slurp(decomp_path, io.in));
  const auto rep = verify(graphs[0], d);
  for (const auto& v : rep.violations) io.out << "violation: " << v.describe() << "\n";
  io.out << (rep.valid ? "valid" : "invalid") << " " << (rep.good ? "good" : "not-good")
         << " paths=" << rep.path_count << " bound=" << rep.bound << "\n";
  return rep.valid && rep.good ? kOk : kFailure;
}

inline void emit(const Streams& io, const BatchReport& rep, const std::string& report_path, bool json) {
  const std::string body = json ? to_json(rep).dump(2) + "\n" : to_text(rep);
  if (report_path.empty()) {
    io.out << body;
    return;
  }
  std::ofstream f(report_path);
  if (!f) throw ParseError("cannot write " + report_path);
  f << body;
  io.out << "# " << rep.command << ": " << rep.records.size() << " graphs, "
         << rep.findings.size() << " findings, report written to " << report_path << "\n";
}

/// Runs the tool; args exclude the program name.
inline int run(const std::vector<std::string>& args, const Streams& io) {
  CLI::App app{"Path decompositions of graphs with maximum degree at most 5", "gallai"};
  app.require_subcommand(1);

  struct Options {
    std::string format, input, decomp, report;
    std::size_t max_n = 7;
    std::uint64_t budget = kDefaultNodeBudget;
    bool trace = false, json = false;
  };
  Options so, vo, co, fo, sc;
  const std::vector<std::string> formats{"g6", "edgelist"};

  auto* solve_cmd = app.add_subcommand("solve", "Decompose each input graph into at most ceil(n/2) paths");
  solve_cmd->add_option("input", so.input, "Graph file, '-' for stdin")->default_val("-");
  solve_cmd->add_option("--format", so.format, "Input format")->check(CLI::IsMember(formats))->default_val("edgelist");
  solve_cmd->add_option("--budget", so.budget, "Node budget of the base-case search");
  solve_cmd->add_flag("--trace", so.trace, "Print the reduction trace");
  solve_cmd->add_flag("--json", so.json, "Structured output");

  auto* verify_cmd = app.add_subcommand("verify", "Check a decomposition against a graph");
  verify_cmd->add_option("graph", vo.input, "Graph file")->required();
  verify_cmd->add_option("decomposition", vo.decomp, "Decomposition file")->required();
  verify_cmd->add_option("--format", vo.format, "Graph format")->check(CLI::IsMember(formats))->default_val("edgelist");

  auto batch = [&](const char* name, const char* help, std::size_t cap, Options& o) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("--max-n", o.max_n, "Largest order for the internal enumerator")
        ->check(CLI::Range(std::size_t{2}, cap));
    c->add_option("--input", o.input, "graph6 stream instead of the internal enumerator ('-' for stdin)");
    c->add_option("--format", o.format, "Stream format")->check(CLI::IsMember(formats))->default_val("g6");
    c->add_option("--budget", o.budget, "Node budget of the base-case search");
    c->add_option("--report", o.report, "Write the report to this path");
    c->add_flag("--json", o.json, "Structured report");
    return c;
  };
  auto* check_cmd = batch("check", "Solve, verify and check structure over many graphs", kMaxEnumerateOrder, co);
  auto* floor_cmd = batch("floor-search", "Look for graphs needing more than floor(n/2) paths", 7, fo);
  auto* scan_cmd = batch("scan", "Configuration histogram only", kMaxEnumerateOrder, sc);

  std::vector<std::string> argv_store{"gallai"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, io.out, io.err);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(io, so.input, so.format, {so.budget}, so.trace, so.json);
    if (verify_cmd->parsed()) return cmd_verify(io, vo.input, vo.decomp, vo.format);
    const Options& o = check_cmd->parsed() ? co : floor_cmd->parsed() ? fo : sc;
    const SolveOptions opts{o.budget};
    const auto graphs = o.input.empty() ? internal_graphs(o.max_n) : read_graphs(slurp(o.input, io.in), o.format);
    BatchReport rep;
    if (check_cmd->parsed()) rep = run_check(graphs, opts);
    if (floor_cmd->parsed()) rep = run_floor_search(graphs, opts);
    if (scan_cmd->parsed()) rep = run_scan(graphs);
    emit(io, rep, o.report, o.json);
    if (rep.budget_exhausted) return kBudget;
    if (floor_cmd->parsed()) return kOk;
    return rep.findings.empty() ? kOk : kFailure;
  } catch (const BudgetExhausted& e) {
    io.err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    // ParseError and PreconditionError: malformed or out-of-class input.
    io.err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    io.err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace gallai::cli
