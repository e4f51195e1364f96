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

#include "topas/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace topas {

struct PhysicalTopology {
  std::string name;  // normalized spec string
  Graph graph;       // always connected
};

/// Build from a spec string: "linear:N", "mesh:RxC", "falcon27", or
/// "file:PATH" (edge list, "u v" per line). Throws on anything else.
PhysicalTopology build_topology(const std::string& spec);

/// The 27-vertex heavy-hex coupling graph (28 edges, max degree 3).
Graph falcon27_graph();

// Connected graphs on 2..4 vertices, by conventional name. The order-4
// prototypes, on vertices {0,1,2,3}:
//   line     0-1-2-3
//   star     hub 0
//   ring     4-cycle
//   kite     triangle 0,1,2 with pendant 3 on 2
//   theta    complete minus the 0-3 edge
//   complete all six edges
struct NamedGraph {
  std::string name;
  Graph graph;
};

/// All named prototypes of the given order (2, 3 or 4), in canonical name
/// order (the order used for tie-breaking).
const std::vector<NamedGraph>& named_graphs(int order);

/// Conventional name for a graph of order 2..4, if it is connected.
std::optional<std::string> graph_name(const Graph& g);

/// Stable string key for any graph of order <= 8: the conventional name
/// when there is one, otherwise "g<order>-<canonical mask in hex>".
std::string graph_key(const Graph& g);

/// Isomorphism classes of connected order-k graphs (2 <= k <= 4) that occur
/// as subgraphs of the physical topology, in canonical name order.
std::vector<NamedGraph> embedded_subtopologies(const PhysicalTopology& phys,
                                               int k);

}  // namespace topas
