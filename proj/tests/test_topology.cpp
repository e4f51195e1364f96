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

#include "topas/topology.hpp"

#include "oracles.hpp"
#include "topas/error.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

using namespace topas;

namespace {

std::set<std::string> names_of(const std::vector<NamedGraph>& graphs) {
  std::set<std::string> names;
  for (const auto& g : graphs) names.insert(g.name);
  return names;
}

}  // namespace

TEST_CASE("topology builders") {
  const PhysicalTopology lin = build_topology("linear:4");
  CHECK(lin.graph.order == 4);
  CHECK(lin.graph.edges ==
        std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});

  const PhysicalTopology mesh = build_topology("mesh:2x2");
  CHECK(mesh.graph.order == 4);
  CHECK(mesh.graph.edges.size() == 4);  // the 4-cycle
  CHECK(isomorphic(mesh.graph,
                   Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));

  const PhysicalTopology falcon = build_topology("falcon27");
  CHECK(falcon.graph.order == 27);
  CHECK(falcon.graph.edges.size() == 28);
  const auto deg = falcon.graph.degrees();
  CHECK(*std::max_element(deg.begin(), deg.end()) == 3);
  CHECK(falcon.graph.connected());

  CHECK_THROWS_AS(build_topology("torus:3"), Error);
  CHECK_THROWS_AS(build_topology("mesh:2"), Error);
}

TEST_CASE("topology from an edge-list file") {
  const std::string path = "topas_test_topology.txt";
  {
    std::ofstream out(path);
    out << "0 1\n1 2\n2 0\n";
  }
  const PhysicalTopology t = build_topology("file:" + path);
  CHECK(t.graph.order == 3);
  CHECK(t.graph.edges.size() == 3);
  std::remove(path.c_str());
}

TEST_CASE("embedded order-4 candidate sets") {
  CHECK(names_of(embedded_subtopologies(build_topology("mesh:4x4"), 4)) ==
        std::set<std::string>{"line", "star", "ring"});
  CHECK(names_of(embedded_subtopologies(build_topology("falcon27"), 4)) ==
        std::set<std::string>{"line", "star"});
  CHECK(names_of(embedded_subtopologies(build_topology("linear:8"), 4)) ==
        std::set<std::string>{"line"});
}

TEST_CASE("embedded candidates at lower orders") {
  CHECK(names_of(embedded_subtopologies(build_topology("mesh:4x4"), 3)) ==
        std::set<std::string>{"path3"});
  CHECK(names_of(embedded_subtopologies(build_topology("linear:4"), 2)) ==
        std::set<std::string>{"edge"});
}

TEST_CASE("candidate sets agree with brute-force subgraph classification") {
  for (const std::string spec : {"mesh:3x3", "falcon27", "linear:6"}) {
    const PhysicalTopology phys = build_topology(spec);
    const auto returned = names_of(embedded_subtopologies(phys, 4));
    for (const NamedGraph& ng : named_graphs(4)) {
      const bool contained =
          oracle::contains_subgraph_exhaustive(ng.graph, phys.graph);
      CHECK(returned.count(ng.name) == (contained ? 1u : 0u));
    }
  }
}

TEST_CASE("every returned subtopology is connected and embeds") {
  for (const std::string spec : {"mesh:3x3", "falcon27", "linear:6"}) {
    const PhysicalTopology phys = build_topology(spec);
    for (int k = 2; k <= 4; ++k) {
      for (const NamedGraph& ng : embedded_subtopologies(phys, k)) {
        CHECK(ng.graph.connected());
        CHECK(embeds(ng.graph, phys.graph));
      }
    }
  }
}

TEST_CASE("graph names") {
  CHECK(*graph_name(Graph(4, {{0, 1}, {1, 2}, {2, 3}})) == "line");
  CHECK(*graph_name(Graph(4, {{3, 1}, {1, 0}, {1, 2}})) == "star");
  CHECK(*graph_name(Graph(3, {{0, 2}, {2, 1}})) == "path3");
  // Disconnected graphs fall back to a canonical hex key.
  const Graph lonely(4, {{0, 1}});
  CHECK_FALSE(graph_name(lonely).has_value());
  CHECK(graph_key(lonely).rfind("g4-", 0) == 0);
}
