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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace topas {

using Edge = std::pair<int, int>;  // always stored with first < second

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on vertices [0, order); no self-loops.
struct Graph {
  int order = 0;
  std::vector<Edge> edges;  // normalized, sorted, unique

  Graph() = default;
  Graph(int order, std::vector<Edge> edges);

  bool has_edge(int a, int b) const;
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;
  bool connected() const;

  /// Graph with vertices relabeled as v -> perm[v].
  Graph relabel(const std::vector<int>& perm) const;

  bool operator==(const Graph& other) const = default;
};

/// Undirected graph with positive integer edge weights (interaction counts).
struct WeightedGraph {
  int order = 0;
  std::map<Edge, std::int64_t> weights;

  void add(int a, int b, std::int64_t w = 1);
  std::int64_t weight(int a, int b) const;
  std::int64_t total_weight() const;
  Graph support() const;  // unweighted edge set
};

/// Canonical encoding: minimum upper-triangular adjacency bitmask over all
/// vertex permutations. Exact for the small orders used here (<= 8).
std::uint64_t canonical_key(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// True iff `g` has an injective vertex map into `host` carrying every
/// edge of g to an edge of host (subgraph monomorphism, backtracking).
bool embeds(const Graph& g, const Graph& host);

/// All vertex sets of size 2..k whose induced subgraph is connected.
std::vector<std::vector<int>> connected_vertex_sets(const Graph& g, int k);

/// Parse an edge-list ("u v" per line, '#' comments) into a Graph.
Graph graph_from_edge_list_text(const std::string& text);

}  // namespace topas
