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

#include "topas/circuit.hpp"
#include "topas/graph.hpp"
#include "topas/rng.hpp"
#include "topas/topology.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace topas {

/// Mean internal SWAPs per CNOT for blocks with a given interaction
/// pattern, measured against one physical topology.
struct RoutabilityTable {
  std::string topology;
  int corpus_size = 0;
  std::uint64_t seed = 0;
  std::map<std::string, double> scores;  // graph_key -> mean rate
};

/// Measurement harness: `corpus_size` samples, each a wide random circuit
/// with one marked block whose interaction graph is exactly `g` (10 block
/// CNOTs), laid out and routed; reports the mean of inserted SWAPs inside
/// the block span per block CNOT.
double measure_graph_routability(const PhysicalTopology& phys, const Graph& g,
                                 int corpus_size, std::uint64_t seed);

/// Canonical representatives of all graphs on 2..4 vertices with at least
/// one edge (isolated vertices allowed), in a stable order.
std::vector<Graph> small_graph_classes();

RoutabilityTable build_routability_table(const PhysicalTopology& phys,
                                         int corpus_size, std::uint64_t seed);

/// Table lookup by canonical key; missing entries are measured on demand
/// with the table's own corpus size and seed, then cached.
double routability_score(const Graph& g, const PhysicalTopology& phys,
                         RoutabilityTable& table);

std::string routability_to_json(const RoutabilityTable& table);
RoutabilityTable routability_from_json(const std::string& text);
void save_routability_table(const RoutabilityTable& table,
                            const std::string& path);
RoutabilityTable load_routability_table(const std::string& path);

/// Random block over g.order wires whose interaction graph is exactly g:
/// every edge appears at least once, remaining CNOTs drawn uniformly.
Circuit random_block_on(const Graph& g, int cnots, Rng& rng);

}  // namespace topas
