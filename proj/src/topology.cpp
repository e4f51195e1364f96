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

#include "topas/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace topas {

namespace {

int parse_int(const std::string& s) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || v <= 0) {
    throw Error("bad integer in topology spec: '" + s + "'");
  }
  return v;
}

Graph linear_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph mesh_graph(int rows, int cols) {
  std::vector<Edge> edges;
  const auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back(make_edge(id(r, c), id(r, c + 1)));
      if (r + 1 < rows) edges.push_back(make_edge(id(r, c), id(r + 1, c)));
    }
  }
  return Graph(rows * cols, std::move(edges));
}

}  // namespace

Graph falcon27_graph() {
  // 27-qubit heavy-hex coupling map, fixed here as the project's reference
  // device graph: 27 vertices, 28 edges, max degree 3, girth 12.
  // Three horizontal rails joined by vertical bridges:
  //   rail A: 0-1-2-3-5-8-9          bridges down: 1-4-7, 8-11-14
  //   rail B: 6-7-10-12-13-14-16     bridges down: 12-15-18, 16-19-22
  //   rail C: 17-18-21-23-24-25-26   bridge up: 22-25; pendant: 19-20
  static const std::vector<Edge> edges = {
      {0, 1},   {1, 2},   {1, 4},   {2, 3},   {3, 5},   {4, 7},   {5, 8},
      {6, 7},   {7, 10},  {8, 9},   {8, 11},  {10, 12}, {11, 14}, {12, 13},
      {12, 15}, {13, 14}, {14, 16}, {15, 18}, {16, 19}, {17, 18}, {18, 21},
      {19, 20}, {19, 22}, {21, 23}, {22, 25}, {23, 24}, {24, 25}, {25, 26}};
  return Graph(27, edges);
}

PhysicalTopology build_topology(const std::string& spec) {
  Graph g;
  if (spec.rfind("linear:", 0) == 0) {
    const int n = parse_int(spec.substr(7));
    if (n < 2) throw Error("linear topology needs at least 2 qubits");
    g = linear_graph(n);
  } else if (spec.rfind("mesh:", 0) == 0) {
    const std::string dims = spec.substr(5);
    const auto x = dims.find('x');
    if (x == std::string::npos) {
      throw Error("mesh spec must look like mesh:RxC");
    }
    const int rows = parse_int(dims.substr(0, x));
    const int cols = parse_int(dims.substr(x + 1));
    if (rows * cols < 2) throw Error("mesh topology needs at least 2 qubits");
    g = mesh_graph(rows, cols);
  } else if (spec == "falcon27") {
    g = falcon27_graph();
  } else if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw Error("cannot open topology file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    g = graph_from_edge_list_text(buf.str());
  } else {
    throw Error("unknown topology spec '" + spec +
                "' (expected linear:N, mesh:RxC, falcon27, or file:PATH)");
  }
  if (!g.connected()) throw Error("physical topology must be connected");
  return PhysicalTopology{spec, std::move(g)};
}

const std::vector<NamedGraph>& named_graphs(int order) {
  static const std::vector<NamedGraph> order2 = {
      {"edge", Graph(2, {{0, 1}})},
  };
  static const std::vector<NamedGraph> order3 = {
      {"path3", Graph(3, {{0, 1}, {1, 2}})},
      {"triangle", Graph(3, {{0, 1}, {1, 2}, {0, 2}})},
  };
  static const std::vector<NamedGraph> order4 = {
      {"line", Graph(4, {{0, 1}, {1, 2}, {2, 3}})},
      {"star", Graph(4, {{0, 1}, {0, 2}, {0, 3}})},
      {"ring", Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})},
      {"kite", Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})},
      {"theta", Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})},
      {"complete",
       Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})},
  };
  switch (order) {
    case 2:
      return order2;
    case 3:
      return order3;
    case 4:
      return order4;
    default:
      throw Error("named graphs exist only for orders 2..4");
  }
}

std::optional<std::string> graph_name(const Graph& g) {
  if (g.order < 2 || g.order > 4) return std::nullopt;
  const std::uint64_t key = canonical_key(g);
  for (const NamedGraph& ng : named_graphs(g.order)) {
    if (canonical_key(ng.graph) == key) return ng.name;
  }
  return std::nullopt;
}

std::string graph_key(const Graph& g) {
  if (auto name = graph_name(g)) return *name;
  std::ostringstream out;
  out << "g" << g.order << "-" << std::hex
      << (canonical_key(g) & 0x00ffffffffffffffULL);
  return out.str();
}

std::vector<NamedGraph> embedded_subtopologies(const PhysicalTopology& phys,
                                               int k) {
  if (k < 2 || k > 4) throw Error("subtopology order must be 2..4");
  std::vector<NamedGraph> out;
  for (const NamedGraph& ng : named_graphs(k)) {
    if (embeds(ng.graph, phys.graph)) out.push_back(ng);
  }
  return out;
}

}  // namespace topas
