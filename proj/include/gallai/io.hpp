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

#pragma once

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

/// Malformed graph6 or edge-list input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace io_detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace io_detail

/// Decodes one graph6 line. The optional ">>graph6<<" header is accepted.
inline Graph parse_graph6(std::string_view line) {
  line = io_detail::trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  for (char c : line) {
    if (c < 63 || c > 126) {
      throw ParseError("graph6: byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))) +
                       " outside 63..126");
    }
  }
  if (line.empty()) throw ParseError("graph6: empty input");
  std::size_t pos = 0;
  std::size_t n = 0;
  if (line[0] != 126) {
    n = static_cast<std::size_t>(line[0] - 63);
    pos = 1;
  } else {
    if (line.size() >= 2 && line[1] == 126) throw ParseError("graph6: orders above 258047 are not supported");
    if (line.size() < 4) throw ParseError("graph6: truncated order header");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::size_t>(line[i] - 63);
    pos = 4;
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos < bytes) throw ParseError("graph6: truncated adjacency data");
  if (line.size() - pos > bytes) throw ParseError("graph6: trailing bytes after adjacency data");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + k / 6] - 63;
      if (byte & (1 << (5 - k % 6))) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((line[pos + k / 6] - 63) & (1 << (5 - k % 6))) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph::from_edges(n, edges);
}

inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    throw PreconditionError("graph6: orders above 258047 are not supported");
  }
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

/// Reads one graph per non-blank line.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (io_detail::trim(line).empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

/// Lines of "u v"; '#' starts a comment. The order is one more than the
/// largest id.
inline Graph parse_edgelist(std::string_view text) {
  std::vector<Edge> edges;
  Vertex top = 0;
  bool any = false;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    std::istringstream toks{std::string(line)};
    std::vector<std::string> words;
    for (std::string w; toks >> w;) words.push_back(w);
    if (words.empty()) continue;
    const std::string where = "edge list line " + std::to_string(lineno) + ": ";
    if (words.size() != 2) throw ParseError(where + "expected two vertex ids");
    Vertex ends[2];
    for (int i = 0; i < 2; ++i) {
      const auto& w = words[static_cast<std::size_t>(i)];
      auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), ends[i]);
      if (ec != std::errc() || p != w.data() + w.size() || ends[i] == kNoVertex) {
        throw ParseError(where + "non-numeric vertex id '" + w + "'");
      }
    }
    if (ends[0] == ends[1]) throw ParseError(where + "self-loop at " + words[0]);
    edges.emplace_back(ends[0], ends[1]);
    top = std::max({top, ends[0], ends[1]});
    any = true;
  }
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
    throw ParseError("edge list: duplicate edge " + std::to_string(it->a) + " " + std::to_string(it->b));
  }
  return Graph::from_edges(any ? top + 1 : 0, edges);
}

inline std::string write_edgelist(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) out += std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
  return out;
}

}  // namespace gallai
