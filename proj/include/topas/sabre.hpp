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
#include "topas/topology.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace topas {

/// Injective assignment of logical qubits to physical wires.
struct Placement {
  std::vector<int> phys_of;  // index = logical qubit

  int width() const { return static_cast<int>(phys_of.size()); }
};

struct RoutingParams {
  int lookahead = 20;          // extended-set size beyond the front layer
  double extended_weight = 0.5;
  double decay_step = 0.001;   // per-use decay increment (factor 1.001)
};

struct MappedCircuit {
  Circuit circuit;      // over physical wires, SWAPs decomposed to CNOTs
  Placement initial_placement;
  Placement final_placement;  // where each logical qubit ended up
  int swap_count = 0;         // inserted SWAPs before decomposition
  std::map<int, int> internal_swaps;  // partition id -> SWAPs inside its span
};

/// Random initial placement refined by forward/backward routing passes,
/// keeping the start placement whose forward pass inserted the fewest
/// SWAPs. Deterministic for a fixed seed.
Placement sabre_layout(const Circuit& c, const PhysicalTopology& phys,
                       int iters, std::uint64_t seed,
                       const RoutingParams& params = {});

/// Front-layer heuristic routing. Executable gates are emitted eagerly;
/// when the front layer is blocked, the SWAP minimizing
///   decay(u) decay(v) * (mean front distance
///                        + extended_weight * mean lookahead distance)
/// is inserted. Inserted SWAPs are attributed to the innermost partition
/// span (trailing tag rule) for the internal-SWAP statistics, then
/// decomposed into CNOTs.
MappedCircuit sabre_route(const Circuit& c, const PhysicalTopology& phys,
                          const Placement& placement, std::uint64_t seed,
                          const RoutingParams& params = {});

/// True iff every 2-qubit gate acts on an edge of the topology.
bool validate_mapping(const MappedCircuit& mc, const PhysicalTopology& phys);
bool validate_mapping(const Circuit& c, const PhysicalTopology& phys);

/// Per partition: inserted SWAPs strictly between its first and last gate,
/// divided by its CNOT count; partitions with zero CNOTs are omitted.
std::map<int, double> internal_swap_stats(const MappedCircuit& mc);

/// All-pairs shortest-path distances of a topology (BFS).
std::vector<std::vector<int>> distance_matrix(const Graph& g);

}  // namespace topas
