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
#include <string>

#include "gsqss/errors.hpp"
#include "gsqss/graph_io.hpp"
#include "oracles.hpp"

using namespace gsqss;

namespace {

void expect_parse_error(std::string_view text, std::size_t line, std::size_t column) {
  try {
    parse_edge_list(text);
    ADD_FAILURE() << "no error for: " << text;
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

}  // namespace

TEST(EdgeList, ParsesC5) {
  EXPECT_EQ(parse_edge_list("5\n0 1\n1 2\n2 3\n3 4\n4 0"), family::cycle(5));
  EXPECT_EQ(parse_edge_list("# comment\n\n5\n0 1\n\n1 2\n2 3 \n3 4\n4 0\n"), family::cycle(5));
  EXPECT_EQ(parse_edge_list("3\r\n0 1\r\n"), Graph(3, {{0, 1}}));
  EXPECT_EQ(parse_edge_list("4\n").edge_count(), 0U);
}

TEST(EdgeList, Errors) {
  expect_parse_error("2\n0 0", 2, 1);
  expect_parse_error("2\n0 2", 2, 3);
  expect_parse_error("2\n0 x", 2, 3);
  expect_parse_error("2\n0 1 7", 2, 5);
  expect_parse_error("3\n0 1\n1 0", 3, 1);
  expect_parse_error("x", 1, 1);
  expect_parse_error("99999999", 1, 1);
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("# only a comment\n"), ParseError);
}

TEST(EdgeList, RoundTrip) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const auto g = oracle::random_graph(1 + rng() % 20, rng);
    EXPECT_EQ(parse_edge_list(serialize_edge_list(g)), g);
  }
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(serialize_graph6(family::cycle(5)), "Dhc");
  EXPECT_EQ(serialize_graph6(family::complete(3)), "Bw");
  EXPECT_EQ(serialize_graph6(Graph(1)), "@");
  EXPECT_EQ(serialize_graph6(Graph(0)), "?");
  // 4-vertex path 0-1-2-3: upper triangle column-wise bits 1,0,1,0,0,1 -> 101001 = 41 + 63
  EXPECT_EQ(serialize_graph6(family::path(4)), "Ch");
}

TEST(Graph6, DQcRoundTrip) {
  const auto g = parse_graph6("DQc");
  EXPECT_EQ(g.order(), 5U);
  EXPECT_EQ(serialize_graph6(g), "DQc");
  // D = 5 vertices; Q = 81-63 = 18 = 010010, c = 99-63 = 36 = 100100
  // bits (0,1)=0 (0,2)=1 (1,2)=0 (0,3)=0 (1,3)=1 (2,3)=0 (0,4)=1 (1,4)=0 (2,4)=0 (3,4)=1
  EXPECT_EQ(g, Graph(5, {{0, 2}, {1, 3}, {0, 4}, {3, 4}}));
}

TEST(Graph6, RoundTripIncludingLongForm) {
  std::mt19937_64 rng(32);
  for (std::size_t n : {2U, 7U, 62U, 63U, 64U, 100U}) {
    const auto g = oracle::random_graph(n, rng);
    const auto text = serialize_graph6(g);
    EXPECT_EQ(parse_graph6(text), g) << n;
    EXPECT_EQ(text[0] == '~', n >= 63) << n;
  }
  EXPECT_EQ(parse_graph6(">>graph6<<Dhc\n"), family::cycle(5));
}

TEST(Graph6, Errors) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("Dh"), ParseError);      // too short
  EXPECT_THROW(parse_graph6("Dhcc"), ParseError);    // too long
  EXPECT_THROW(parse_graph6("D h"), ParseError);     // byte out of range
  EXPECT_THROW(parse_graph6("Bx"), ParseError);      // nonzero padding
  EXPECT_THROW(parse_graph6("~~~~~~~~"), ParseError);
}

TEST(GraphFormat, Dispatch) {
  EXPECT_EQ(parse_graph_format("graph6"), GraphFormat::Graph6);
  EXPECT_EQ(parse_graph_format("g6"), GraphFormat::Graph6);
  EXPECT_EQ(parse_graph_format("edgelist"), GraphFormat::EdgeList);
  EXPECT_FALSE(parse_graph_format("dot"));
  const auto g = family::cycle(6);
  for (auto f : {GraphFormat::EdgeList, GraphFormat::Graph6}) {
    EXPECT_EQ(parse_graph(serialize_graph(g, f), f), g);
  }
}
