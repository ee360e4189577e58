// Copyright 2026 The polymedial Authors
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


#include "polymedial/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "polymedial/error.hpp"

namespace polymedial::graph {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::uint64_t> parse_numbers(std::string_view s, std::size_t line) {
  std::vector<std::uint64_t> out;
  s = trim(s);
  while (!s.empty()) {
    std::uint64_t x = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr == s.data()) {
      throw DomainError("line " + std::to_string(line) + ": expected a number");
    }
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    if (!s.empty() && !std::isspace(static_cast<unsigned char>(s.front()))) {
      throw DomainError("line " + std::to_string(line) + ": expected a number");
    }
    s = trim(s);
    out.push_back(x);
  }
  return out;
}

}  // namespace

std::string write_adjacency(const BipartiteCubicGraph& g) {
  std::ostringstream out;
  for (Point v = 0; v < g.size(); ++v) {
    out << v << ' ' << int(g.type(v)) << ':';
    for (Point w : g.neighbors(v)) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

BipartiteCubicGraph read_adjacency(std::string_view text) {
  struct Row {
    std::uint64_t id;
    std::uint8_t type;
    std::vector<std::uint64_t> nbrs;
  };
  std::vector<Row> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw DomainError("line " + std::to_string(line_no) + ": missing ':'");
    }
    auto head = parse_numbers(line.substr(0, colon), line_no);
    if (head.size() != 2) {
      throw DomainError("line " + std::to_string(line_no) + ": expected 'id type:'");
    }
    if (head[1] != 1 && head[1] != 2) {
      throw DomainError("line " + std::to_string(line_no) + ": type must be 1 or 2");
    }
    rows.push_back({head[0], static_cast<std::uint8_t>(head[1]),
                    parse_numbers(line.substr(colon + 1), line_no)});
  }
  const std::size_t n = rows.size();
  std::vector<std::uint8_t> types(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<Edge> edges;
  for (const auto& r : rows) {
    if (r.id >= n) throw DomainError("vertex id " + std::to_string(r.id) + " out of range");
    if (seen[r.id]) throw DomainError("vertex " + std::to_string(r.id) + " listed twice");
    seen[r.id] = 1;
    types[r.id] = r.type;
  }
  for (const auto& r : rows) {
    for (auto w : r.nbrs) {
      if (w >= n) throw DomainError("neighbor " + std::to_string(w) + " out of range");
      if (r.id < w) edges.emplace_back(static_cast<Point>(r.id), static_cast<Point>(w));
    }
  }
  Graph g = Graph::from_edges(n, edges);
  // Every listed adjacency must be symmetric.
  for (const auto& r : rows) {
    if (g.degree(static_cast<Point>(r.id)) != r.nbrs.size()) {
      throw DomainError("adjacency of vertex " + std::to_string(r.id) + " is not symmetric");
    }
  }
  return BipartiteCubicGraph(std::move(g), std::move(types));
}

std::string write_dot(const BipartiteCubicGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Point v = 0; v < g.size(); ++v) {
    out << "  " << v << " [shape=" << (g.type(v) == 1 ? "circle" : "box") << "];\n";
  }
  for (auto [u, v] : g.graph().edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string write_graph6(const Graph& g) {
  const std::uint64_t n = g.size();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n < 258048) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  int bits = 0, acc = 0;
  for (Point j = 1; j < n; ++j) {
    for (Point i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        bits = acc = 0;
      }
    }
  }
  if (bits) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph read_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  for (char c : text) {
    if (c < 63 || c > 126) throw DomainError("graph6: invalid character");
  }
  auto take = [&](int count) {
    if (text.size() < static_cast<std::size_t>(count)) throw DomainError("graph6: truncated");
    std::uint64_t x = 0;
    for (int i = 0; i < count; ++i) x = (x << 6) | static_cast<std::uint64_t>(text[i] - 63);
    text.remove_prefix(static_cast<std::size_t>(count));
    return x;
  };
  if (text.empty()) throw DomainError("graph6: empty input");
  std::uint64_t n;
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    text.remove_prefix(1);
    n = take(3);
  } else {
    text.remove_prefix(2);
    n = take(6);
  }
  const std::uint64_t pairs = n * (n - (n ? 1 : 0)) / 2;
  if (text.size() != (pairs + 5) / 6) throw DomainError("graph6: wrong length for " +
                                                        std::to_string(n) + " vertices");
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Point j = 1; j < n; ++j) {
    for (Point i = 0; i < j; ++i, ++k) {
      int byte = text[k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (pairs % 6 && ((text.back() - 63) & ((1 << (6 - pairs % 6)) - 1))) {
    throw DomainError("graph6: nonzero padding");
  }
  return Graph::from_edges(n, edges);
}

}  // namespace polymedial::graph
