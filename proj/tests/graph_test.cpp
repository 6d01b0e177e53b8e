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

#include <gtest/gtest.h>

#include <random>

#include "gsqss/errors.hpp"
#include "gsqss/graph.hpp"
#include "oracles.hpp"

using namespace gsqss;

namespace {

Graph c5() { return family::cycle(5); }

}  // namespace

TEST(VertexSet, Basics) {
  VertexSet s(5, {0, 3});
  EXPECT_EQ(s.size(), 2U);
  EXPECT_TRUE(s.contains(3));
  EXPECT_EQ(s.to_string(), "{0,3}");
  EXPECT_EQ(s.complement(), VertexSet(5, {1, 2, 4}));
  EXPECT_EQ(s.mask(), 0b01001U);
  EXPECT_EQ(VertexSet::from_mask(5, 0b01001), s);
  EXPECT_TRUE(VertexSet(5, {3}).is_subset_of(s));
  EXPECT_TRUE(s.intersects(VertexSet(5, {0, 1})));
  EXPECT_EQ((s ^ VertexSet(5, {0, 1})), VertexSet(5, {1, 3}));
  EXPECT_EQ((s - VertexSet(5, {0})), VertexSet(5, {3}));
  EXPECT_TRUE(lex_less(VertexSet(5, {0, 1}), VertexSet(5, {0, 2})));
  EXPECT_THROW(VertexSet(5, {5}), std::out_of_range);
  EXPECT_THROW(VertexSet::from_mask(3, 0b1000), std::invalid_argument);
  EXPECT_EQ(VertexSet(0).to_string(), "{}");
}

TEST(Graph, Construction) {
  const auto g = c5();
  EXPECT_EQ(g.order(), 5U);
  EXPECT_EQ(g.edge_count(), 5U);
  EXPECT_TRUE(g.adjacent(0, 4));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.degree(2), 2U);
  EXPECT_EQ(g.edges().front(), (Edge{0, 1}));
  EXPECT_EQ(g, Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
  Graph h(3);
  EXPECT_THROW(h.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(h.add_edge(0, 3), std::out_of_range);
}

TEST(OddNeighborhood, Examples) {
  const auto g = c5();
  // 0-indexed: vertex v has neighbors v-1, v+1
  EXPECT_EQ(odd_neighborhood(g, VertexSet(5, {1})), VertexSet(5, {0, 2}));
  EXPECT_TRUE(odd_neighborhood(g, VertexSet(5)).empty());
  EXPECT_EQ(odd_neighborhood(g, VertexSet(5, {2, 4})), VertexSet(5, {0, 1}));
  EXPECT_EQ(even_neighborhood(g, VertexSet(5, {2, 4})), VertexSet(5, {2, 3, 4}));
  EXPECT_THROW(odd_neighborhood(g, VertexSet(4)), std::invalid_argument);
}

TEST(OddNeighborhood, LinearAndMatchesCounting) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 20;
    const auto g = oracle::random_graph(n, rng);
    const auto adj = oracle::adjacency(g);
    const auto x = oracle::random_subset(n, rng);
    const auto y = oracle::random_subset(n, rng);
    EXPECT_EQ(odd_neighborhood(g, x ^ y), odd_neighborhood(g, x) ^ odd_neighborhood(g, y));
    EXPECT_EQ(odd_neighborhood(g, x).mask(), oracle::odd(adj, x.mask()));
  }
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(family::complete(4)).edge_count(), 0U);
  EXPECT_TRUE(oracle::isomorphic(complement(c5()), c5()));
  EXPECT_FALSE(oracle::isomorphic(complement(family::path(4)), family::cycle(4)));
  std::mt19937_64 rng(22);
  for (int t = 0; t < 50; ++t) {
    const auto g = oracle::random_graph(1 + rng() % 12, rng);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(DeltaComplement, Examples) {
  const auto g = c5();
  EXPECT_EQ(delta_complement(g, VertexSet(5)), g);
  EXPECT_EQ(delta_complement(g, VertexSet::full(5)), complement(g));
  const auto k3 = family::complete(3);
  EXPECT_EQ(delta_complement(k3, VertexSet(3, {1, 2})), Graph(3, {{0, 1}, {0, 2}}));
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 12;
    const auto h = oracle::random_graph(n, rng);
    const auto a = oracle::random_subset(n, rng);
    const auto d = delta_complement(h, a);
    EXPECT_EQ(delta_complement(d, a), h);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        const bool inside = a.contains(u) && a.contains(v);
        EXPECT_EQ(d.adjacent(u, v), inside != h.adjacent(u, v));
      }
    }
  }
}

TEST(LexicographicProduct, Examples) {
  const auto p2k3 = lexicographic_product(family::path(2), family::complete(3));
  EXPECT_EQ(p2k3, family::complete(6));
  EXPECT_EQ(p2k3.edge_count(), 15U);

  const Graph tree(4, {{0, 1}, {1, 2}, {1, 3}});
  const auto t = lexicographic_product(tree, family::complete(3));
  EXPECT_EQ(t.order(), 12U);
  EXPECT_EQ(t.edge_count(), 39U);

  const auto cc = lexicographic_product(c5(), c5());
  EXPECT_EQ(cc.order(), 25U);
  EXPECT_EQ(cc.edge_count(), 150U);
}

TEST(LexicographicProduct, DefinitionAndLaws) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n1 = 1 + rng() % 5;
    const std::size_t n2 = 1 + rng() % 5;
    const auto g1 = oracle::random_graph(n1, rng);
    const auto g2 = oracle::random_graph(n2, rng);
    const auto p = lexicographic_product(g1, g2);
    EXPECT_EQ(p.edge_count(), n1 * g2.edge_count() + n2 * n2 * g1.edge_count());
    EXPECT_EQ(complement(p), lexicographic_product(complement(g1), complement(g2)));
    for (std::size_t x = 0; x < n1 * n2; ++x) {
      for (std::size_t y = 0; y < n1 * n2; ++y) {
        const std::size_t u1 = x / n2, u2 = x % n2, v1 = y / n2, v2 = y % n2;
        const bool expected = x != y && (g1.adjacent(u1, v1) || (u1 == v1 && g2.adjacent(u2, v2)));
        EXPECT_EQ(p.adjacent(x, y), expected);
      }
    }
  }
}

TEST(C5Power, Examples) {
  EXPECT_EQ(c5_power(1), c5());
  const auto g = c5_power(2);
  EXPECT_EQ(g.order(), 25U);
  EXPECT_EQ(g.edge_count(), 150U);
  for (std::size_t v = 0; v < 25; ++v) {
    EXPECT_EQ(g.degree(v), 12U);
  }
  EXPECT_EQ(complement(g), lexicographic_product(complement(c5()), complement(c5())));
  EXPECT_EQ(c5_power(3).order(), 125U);
  EXPECT_THROW(c5_power(0), std::invalid_argument);
  EXPECT_THROW(c5_power(6), ResourceLimitError);
}

TEST(Family, Examples) {
  EXPECT_EQ(family::cycle(5), c5());
  EXPECT_EQ(family::complete(3), Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(family::path(3), Graph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(family::cycle(2).edge_count(), 1U);
  EXPECT_EQ(family::cycle(1).edge_count(), 0U);
  EXPECT_EQ(family::random(8, 0.5, 7), family::random(8, 0.5, 7));
  EXPECT_NE(family::random(8, 0.5, 7), family::random(8, 0.5, 8));
  EXPECT_EQ(family::random(6, 0.0, 1).edge_count(), 0U);
  EXPECT_EQ(family::random(6, 1.0, 1), family::complete(6));
  EXPECT_THROW(family::random(4, 1.5, 1), std::invalid_argument);
  EXPECT_THROW(family::random(4, -0.1, 1), std::invalid_argument);
  EXPECT_THROW(family::cycle(0), std::invalid_argument);
}
