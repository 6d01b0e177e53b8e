// Copyright 2026 The gsqss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsqss/errors.hpp"
#include "gsqss/graph.hpp"

namespace gsqss {

enum class GraphFormat { EdgeList, Graph6 };

inline std::optional<GraphFormat> parse_graph_format(std::string_view name) {
  if (name == "edgelist" || name == "edge-list" || name == "el") {
    return GraphFormat::EdgeList;
  }
  if (name == "graph6" || name == "g6") {
    return GraphFormat::Graph6;
  }
  return std::nullopt;
}

/// Largest vertex count either parser accepts; bounds the adjacency allocation.
inline constexpr std::uint64_t kMaxOrder = 1U << 16;

namespace detail {

struct LineCursor {
  std::string_view line;
  std::size_t pos = 0;

  void skip_spaces() {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
      ++pos;
    }
  }
  bool at_end() {
    skip_spaces();
    return pos >= line.size();
  }
};

inline std::size_t read_count(LineCursor &cur, std::size_t line_no, const char *what) {
  cur.skip_spaces();
  const std::size_t start = cur.pos;
  std::size_t value = 0;
  const char *first = cur.line.data() + cur.pos;
  const char *last = cur.line.data() + cur.line.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr == first) {
    throw ParseError(std::string("expected ") + what, line_no, start + 1);
  }
  cur.pos += static_cast<std::size_t>(ptr - first);
  if (cur.pos < cur.line.size() && cur.line[cur.pos] != ' ' && cur.line[cur.pos] != '\t' &&
      cur.line[cur.pos] != '\r') {
    throw ParseError(std::string("malformed ") + what, line_no, cur.pos + 1);
  }
  return value;
}

inline bool blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (c == '#') {
      return true;
    }
    if (c != ' ' && c != '\t' && c != '\r') {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// First line: vertex count. Each further line: "u v" with 0-indexed
/// endpoints. Blank lines and lines starting with '#' are skipped.
inline Graph parse_edge_list(std::string_view text) {
  std::optional<Graph> g;
  std::size_t line_no = 0;
  for (std::size_t start = 0; start < text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    const std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (detail::blank_or_comment(line)) {
      continue;
    }
    detail::LineCursor cur{line};
    if (!g) {
      const std::size_t n = detail::read_count(cur, line_no, "vertex count");
      if (!cur.at_end()) {
        throw ParseError("trailing characters after vertex count", line_no, cur.pos + 1);
      }
      if (n > kMaxOrder) {
        throw ParseError("vertex count " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder), line_no, 1);
      }
      g.emplace(n);
      continue;
    }
    cur.skip_spaces();
    const std::size_t col_u = cur.pos + 1;
    const std::size_t u = detail::read_count(cur, line_no, "vertex");
    cur.skip_spaces();
    const std::size_t col_v = cur.pos + 1;
    const std::size_t v = detail::read_count(cur, line_no, "vertex");
    if (!cur.at_end()) {
      throw ParseError("trailing characters after edge", line_no, cur.pos + 1);
    }
    if (u >= g->order()) {
      throw ParseError("vertex " + std::to_string(u) + " out of range", line_no, col_u);
    }
    if (v >= g->order()) {
      throw ParseError("vertex " + std::to_string(v) + " out of range", line_no, col_v);
    }
    if (u == v) {
      throw ParseError("self-loop on vertex " + std::to_string(u), line_no, col_u);
    }
    if (g->adjacent(u, v)) {
      throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), line_no, col_u);
    }
    g->add_edge(u, v);
  }
  if (!g) {
    throw ParseError("missing vertex count", 0, 0);
  }
  return *g;
}

inline std::string serialize_edge_list(const Graph &g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

/// Standard graph6: size prefix, then the upper triangle column by column,
/// six bits per printable byte (value + 63), most significant bit first.
inline std::string serialize_graph6(const Graph &g) {
  const std::size_t n = g.order();
  std::string out;
  auto put6 = [&out](std::uint64_t v) { out.push_back(static_cast<char>(63 + (v & 63))); };
  if (n <= 62) {
    put6(n);
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      put6(n >> shift);
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      put6(static_cast<std::uint64_t>(n) >> shift);
    }
  }
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        put6(acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    put6(acc << (6 - filled));
  }
  return out;
}


inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  std::size_t offset = 0;
  if (text.substr(0, header.size()) == header) {
    offset = header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  std::size_t pos = offset;
  auto get6 = [&](const char *what) -> std::uint64_t {
    if (pos >= text.size()) {
      throw ParseError(std::string("graph6 truncated while reading ") + what, 1, pos + 1);
    }
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6 character out of range", 1, pos + 1);
    }
    ++pos;
    return c - 63U;
  };

  std::uint64_t n = 0;
  if (pos < text.size() && text[pos] == 126) {
    ++pos;
    if (pos < text.size() && text[pos] == 126) {
      ++pos;
      for (int i = 0; i < 6; ++i) {
        n = (n << 6) | get6("vertex count");
      }
    } else {
      for (int i = 0; i < 3; ++i) {
        n = (n << 6) | get6("vertex count");
      }
    }
  } else {
    n = get6("vertex count");
  }

  if (n > kMaxOrder) {
    throw ParseError("graph6 vertex count " + std::to_string(n) + " exceeds supported maximum", 1, offset + 1);
  }
  const std::uint64_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(bytes),
                     1, pos + 1);
  }
  Graph g(static_cast<std::size_t>(n));
  std::uint64_t chunk = 0;
  int left = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (left == 0) {
        chunk = get6("adjacency");
        left = 6;
      }
      --left;
      if ((chunk >> left) & 1U) {
        g.add_edge(i, j);
      }
    }
  }
  if (left > 0 && (chunk & ((1U << left) - 1)) != 0) {
    throw ParseError("graph6 padding bits must be zero", 1, pos);
  }
  return g;
}

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
}

inline std::string serialize_graph(const Graph &g, GraphFormat format) {
  return format == GraphFormat::EdgeList ? serialize_edge_list(g) : serialize_graph6(g);
}

}  // namespace gsqss
