// Copyright 2026 The Patrol Authors.
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

#include <bit>
#include <random>

#include <doctest.h>

#include "patrol/graph.hpp"

namespace patrol {
namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

Graph triangle() { return Graph({"a", "b", "c"}, Pairs{{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

Graph house() {
  return Graph({"a", "b", "c", "d", "e"},
               Pairs{{"a", "b"}, {"a", "c"}, {"a", "e"}, {"b", "c"},
                     {"b", "d"}, {"c", "d"}, {"d", "e"}});
}

// Subset enumeration oracles.
int brute_cover(const Graph& g) {
  const int m = g.num_edges();
  int best = m + 1;
  for (unsigned s = 0; s < (1u << m); ++s) {
    unsigned seen = 0;
    for (int e = 0; e < m; ++e)
      if (s >> e & 1u) seen |= (1u << g.edges()[e].u) | (1u << g.edges()[e].v);
    if (seen == (1u << g.num_nodes()) - 1)
      best = std::min(best, std::popcount(s));
  }
  return best;
}

int brute_independent(const Graph& g) {
  int best = 0;
  for (unsigned s = 0; s < (1u << g.num_nodes()); ++s) {
    bool ok = true;
    for (const Edge& e : g.edges())
      if ((s >> e.u & 1u) && (s >> e.v & 1u)) ok = false;
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

Graph random_connected(std::mt19937& rng, int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::bernoulli_distribution extra(0.3);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (extra(rng) && std::find(edges.begin(), edges.end(), Edge(u, v)) ==
                            edges.end())
        edges.emplace_back(u, v);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return Graph(labels, edges);
}

TEST_CASE("construction and lookup") {
  const Graph g = house();
  CHECK(g.num_nodes() == 5);
  CHECK(g.num_edges() == 7);
  CHECK(g.index_of("d") == 3);
  CHECK(g.index_of("z") == -1);
  CHECK(g.adjacent(0, 4));
  CHECK_FALSE(g.adjacent(0, 3));
  CHECK(g.can_step(2, 2));
  CHECK(g.neighbors(0) == std::vector<int>{1, 2, 4});
  CHECK(g.edge_index(Edge(3, 1)) >= 0);
  CHECK(g.edge_index(Edge(0, 3)) == -1);
  CHECK(g.adjacency_matrix().sum() == 14);
  CHECK_FALSE(g.has_isolated_node());
}

TEST_CASE("invalid graphs are rejected") {
  CHECK_THROWS_AS(Graph({"a", "b"}, Pairs{{"a", "a"}}), PatrolError);
  CHECK_THROWS_AS(Graph({"a", "b"}, Pairs{{"a", "b"}, {"b", "a"}}), PatrolError);
  CHECK_THROWS_AS(Graph({"a", "a"}, Pairs{}), PatrolError);
  CHECK_THROWS_AS(Graph({"a", "b"}, Pairs{{"a", "c"}}), PatrolError);
}

TEST_CASE("line graphs") {
  const Graph l5 = line_graph(5);
  CHECK(l5.labels() == std::vector<std::string>{"1", "2", "3", "4", "5"});
  CHECK(l5.num_edges() == 4);
  const auto parts = bipartition(l5);
  REQUIRE(parts.has_value());
  CHECK(parts->first == NodeSet{0, 2, 4});
  CHECK(parts->second == NodeSet{1, 3});
  for (int n = 2; n <= 9; ++n) {
    const Graph g = line_graph(n);
    CHECK(covering_number(g).size == (n + 1) / 2);
    CHECK(independence_number(g).size == (n + 1) / 2);
    CHECK(fractional_weightings(g).total == Rational((n + 1) / 2));
  }
}

TEST_CASE("triangle and the five-node example") {
  const Graph t = triangle();
  CHECK_FALSE(bipartition(t).has_value());
  CHECK(covering_number(t).size == 2);
  CHECK(independence_number(t).size == 1);
  CHECK(fractional_weightings(t).total == Rational(3, 2));

  const Graph h = house();
  const CoverResult c = covering_number(h);
  CHECK(c.size == 3);
  CHECK(is_edge_cover(h, c.witness));
  const IndependentResult i = independence_number(h);
  CHECK(i.size == 2);
  CHECK(is_independent_set(h, i.witness));
  const FractionalWeighting w = fractional_weightings(h);
  CHECK(w.total == Rational(5, 2));
  CHECK(is_feasible_weighting(h, w));
}

TEST_CASE("isolated nodes have no covering set") {
  const Graph g({"a", "b", "c"}, Pairs{{"a", "b"}});
  CHECK(g.has_isolated_node());
  CHECK_THROWS_AS(covering_number(g), PatrolError);
  try {
    covering_number(g);
  } catch (const PatrolError& e) {
    CHECK(e.category() == ErrorCategory::kNoCoveringSet);
  }
}

TEST_CASE("search results match subset enumeration on random graphs") {
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + trial % 7;
    const Graph g = random_connected(rng, n);
    const CoverResult c = covering_number(g);
    const IndependentResult i = independence_number(g);
    CHECK(c.size == brute_cover(g));
    CHECK(i.size == brute_independent(g));
    CHECK(is_edge_cover(g, c.witness));
    CHECK(is_independent_set(g, i.witness));
    const FractionalWeighting w = fractional_weightings(g);
    CHECK(is_feasible_weighting(g, w));
    // I <= fractional optimum <= C, and the optimum is half-integral.
    CHECK(Rational(i.size) <= w.total);
    CHECK(w.total <= Rational(c.size));
    CHECK((w.total * 2).str().find('/') == std::string::npos);
  }
}

TEST_CASE("induced subgraph keeps labels") {
  const Graph g = line_graph(6).induced({2, 3, 4});
  CHECK(g.labels() == std::vector<std::string>{"3", "4", "5"});
  CHECK(g.num_edges() == 2);
}

}  // namespace
}  // namespace patrol
