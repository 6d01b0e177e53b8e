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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gsqss/errors.hpp"
#include "gsqss/gf2.hpp"
#include "gsqss/vertex_set.hpp"

namespace gsqss {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..n-1, stored as GF(2) adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n, gf2::BitVector(n)) {}
  Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
      add_edge(u, v);
    }
  }
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return n_; }

  bool adjacent(std::size_t u, std::size_t v) const {
    check(u);
    return adj_[u].test(v);
  }

  void add_edge(std::size_t u, std::size_t v) { set_edge(u, v, true); }
  void remove_edge(std::size_t u, std::size_t v) { set_edge(u, v, false); }
  void toggle_edge(std::size_t u, std::size_t v) { set_edge(u, v, !adjacent(u, v)); }

  void set_edge(std::size_t u, std::size_t v, bool present) {
    check(u);
    check(v);
    if (u == v) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    }
    adj_[u].set(v, present);
    adj_[v].set(u, present);
  }

  const gf2::BitVector &neighbor_bits(std::size_t v) const {
    check(v);
    return adj_[v];
  }
  VertexSet neighbors(std::size_t v) const { return VertexSet::from_bits(neighbor_bits(v)); }

  std::size_t degree(std::size_t v) const { return neighbor_bits(v).count(); }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto &row : adj_) {
      twice += row.count();
    }
    return twice / 2;
  }

  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n_; ++u) {
      for (auto v : adj_[u].indices()) {
        if (u < v) {
          out.emplace_back(u, v);
        }
      }
    }
    return out;
  }

  gf2::BitMatrix adjacency() const {
    return n_ == 0 ? gf2::BitMatrix() : gf2::BitMatrix::from_rows(adj_);
  }

  /// One word per vertex; requires order() <= 64.
  std::vector<std::uint64_t> neighbor_masks() const {
    if (n_ > 64) {
      throw std::logic_error("Graph::neighbor_masks requires at most 64 vertices");
    }
    std::vector<std::uint64_t> masks(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      masks[v] = adj_[v].words()[0];
    }
    return masks;
  }

  friend bool operator==(const Graph &, const Graph &) = default;

 private:
  void check(std::size_t v) const {
    if (v >= n_) {
      throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " + std::to_string(n_));
    }
  }

  std::size_t n_ = 0;
  std::vector<gf2::BitVector> adj_;
};

inline void require_same_universe(const Graph &g, const VertexSet &s, const char *what) {
  if (s.universe() != g.order()) {
    throw std::invalid_argument(std::string(what) + ": vertex set universe " + std::to_string(s.universe()) +
                                " does not match graph order " + std::to_string(g.order()));
  }
}

/// Vertices with an odd number of neighbours in `d`.
inline VertexSet odd_neighborhood(const Graph &g, const VertexSet &d) {
  require_same_universe(g, d, "odd_neighborhood");
  gf2::BitVector acc(g.order());
  for (auto v : d.members()) {
    acc ^= g.neighbor_bits(v);
  }
  return VertexSet::from_bits(std::move(acc));
}

/// V minus odd_neighborhood(g, c).
inline VertexSet even_neighborhood(const Graph &g, const VertexSet &c) { return odd_neighborhood(g, c).complement(); }

inline Graph complement(const Graph &g) {
  Graph h(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) {
        h.add_edge(u, v);
      }
    }
  }
  return h;
}

/// Complements every edge with both endpoints in `a`.
inline Graph delta_complement(const Graph &g, const VertexSet &a) {
  require_same_universe(g, a, "delta_complement");
  Graph h = g;
  const auto m = a.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      h.toggle_edge(m[i], m[j]);
    }
  }
  return h;
}

/// Vertex (u1, u2) is labelled u1 * |V2| + u2.
inline Graph lexicographic_product(const Graph &g1, const Graph &g2) {
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  Graph g(n1 * n2);
  for (std::size_t u1 = 0; u1 < n1; ++u1) {
    for (std::size_t u2 = 0; u2 < n2; ++u2) {
      const std::size_t u = u1 * n2 + u2;
      for (auto v2 : g2.neighbor_bits(u2).indices()) {
        if (u2 < v2) {
          g.add_edge(u, u1 * n2 + v2);
        }
      }
      for (auto v1 : g1.neighbor_bits(u1).indices()) {
        if (u1 < v1) {
          for (std::size_t v2 = 0; v2 < n2; ++v2) {
            g.add_edge(u, v1 * n2 + v2);
          }
        }
      }
    }
  }
  return g;
}

namespace family {

inline Graph cycle(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("cycle: n must be at least 1");
  }
  Graph g(n);
  if (n == 2) {
    g.add_edge(0, 1);
  } else if (n >= 3) {
    for (std::size_t v = 0; v < n; ++v) {
      g.add_edge(v, (v + 1) % n);
    }
  }
  return g;
}

inline Graph complete(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("complete: n must be at least 1");
  }
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      g.add_edge(u, v);
    }
  }
  return g;
}

inline Graph path(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("path: n must be at least 1");
  }
  Graph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) {
    g.add_edge(v, v + 1);
  }
  return g;
}

/// Erdos-Renyi G(n, p). Pairs are visited as (0,1), (0,2), ..., (n-2,n-1);
/// each consumes one draw of std::mt19937_64, so output is portable.
inline Graph random(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) {
    throw std::invalid_argument("random: n must be at least 1");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("random: edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

}  // namespace family

/// Iterated lexicographic power C5 * C5 * ... (i factors), 5^i vertices.
inline Graph c5_power(std::size_t i, std::size_t max_vertices = 3125) {
  if (i == 0) {
    throw std::invalid_argument("c5_power: exponent must be at least 1");
  }
  std::size_t n = 1;
  for (std::size_t j = 0; j < i; ++j) {
    if (n > max_vertices / 5) {
      throw ResourceLimitError("c5_power: 5^" + std::to_string(i) + " vertices exceeds limit " +
                               std::to_string(max_vertices));
    }
    n *= 5;
  }
  const Graph c5 = family::cycle(5);
  Graph g = c5;
  for (std::size_t j = 1; j < i; ++j) {
    g = lexicographic_product(c5, g);
  }
  return g;
}

}  // namespace gsqss
