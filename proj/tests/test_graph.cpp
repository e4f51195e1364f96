// Copyright 2026 The topas developers
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

#include "topas/graph.hpp"

#include "oracles.hpp"
#include "topas/error.hpp"

#include <doctest.h>

using namespace topas;

TEST_CASE("connected vertex sets of a path") {
  const Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto sets = connected_vertex_sets(path, 3);
  const std::vector<std::vector<int>> expect = {
      {0, 1}, {0, 1, 2}, {1, 2}, {1, 2, 3}, {2, 3}};
  CHECK(sets == expect);
}

TEST_CASE("edgeless graph has no groups") {
  const Graph g(5, {});
  CHECK(connected_vertex_sets(g, 4).empty());
}

TEST_CASE("K4 groups: 6 pairs + 4 triples + 1 quad") {
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(connected_vertex_sets(k4, 4).size() == 11);
}

TEST_CASE("canonical keys identify isomorphism classes") {
  const Graph p4a(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph p4b(4, {{2, 0}, {0, 3}, {3, 1}});  // relabeled path
  CHECK(canonical_key(p4a) == canonical_key(p4b));
  CHECK(isomorphic(p4a, p4b));

  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(isomorphic(p4a, star));

  // Brute-force check across all order-4 graphs: canonical keys are equal
  // exactly when an exhaustive isomorphism search succeeds.
  std::vector<Graph> graphs;
  std::vector<Edge> pairs = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask & (1u << i)) edges.push_back(pairs[i]);
    }
    graphs.emplace_back(4, edges);
  }
  for (std::size_t i = 0; i < graphs.size(); i += 7) {
    for (std::size_t j = 0; j < graphs.size(); j += 5) {
      const bool by_key = canonical_key(graphs[i]) == canonical_key(graphs[j]);
      const bool by_search =
          graphs[i].edges.size() == graphs[j].edges.size() &&
          oracle::contains_subgraph_exhaustive(graphs[i], graphs[j]) &&
          oracle::contains_subgraph_exhaustive(graphs[j], graphs[i]);
      CHECK(by_key == by_search);
    }
  }
}

TEST_CASE("embeds: basic monomorphisms") {
  const Graph ring(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const Graph line10(10, [] {
    std::vector<Edge> e;
    for (int i = 0; i < 9; ++i) e.push_back({i, i + 1});
    return e;
  }());
  CHECK(embeds(star, star));
  CHECK_FALSE(embeds(star, line10));  // needs a degree-3 vertex
  CHECK(embeds(Graph(2, {{0, 1}}), ring));
  CHECK(embeds(Graph(4, {{0, 1}, {1, 2}, {2, 3}}), ring));  // path in cycle
  CHECK_FALSE(embeds(ring, line10));
}

TEST_CASE("embeds agrees with exhaustive search on random graphs") {
  Rng rng(808);
  for (int trial = 0; trial < 60; ++trial) {
    const int pn = rng.range(2, 5);
    const int hn = rng.range(2, 7);
    std::vector<Edge> pe, he;
    for (int a = 0; a < pn; ++a)
      for (int b = a + 1; b < pn; ++b)
        if (rng.uniform() < 0.5) pe.push_back({a, b});
    for (int a = 0; a < hn; ++a)
      for (int b = a + 1; b < hn; ++b)
        if (rng.uniform() < 0.5) he.push_back({a, b});
    const Graph pattern(pn, pe), host(hn, he);
    CHECK(embeds(pattern, host) ==
          oracle::contains_subgraph_exhaustive(pattern, host));
  }
}

TEST_CASE("edge list parsing") {
  const Graph g = graph_from_edge_list_text("0 1\n1 2\n# comment\n\n2 3\n");
  CHECK(g.order == 4);
  CHECK(g.edges.size() == 3);
  CHECK_THROWS_AS(graph_from_edge_list_text("0\n"), Error);
  CHECK_THROWS_AS(graph_from_edge_list_text("1 1\n"), Error);
}
