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

#include <set>
#include <string>
#include <vector>

namespace topas {

/// A contiguous-per-qubit block of gates on at most k qubits. Local wire i
/// of `sub` is global qubit `qubits[i]` (qubits sorted ascending).
struct Partition {
  int id = 0;
  std::vector<int> qubits;
  Circuit sub;
  bool pass_through = false;  // width-1 leftovers; skips synthesis

  int local_of(int global_qubit) const;
  int global_of(int local_qubit) const { return qubits[local_qubit]; }
};

struct PartitionedCircuit {
  int width = 0;
  std::vector<Partition> parts;  // slot order
  Circuit original;
};

/// All vertex sets of size 2..k whose induced subgraph of g is connected.
std::vector<std::vector<int>> enumerate_groups(const WeightedGraph& g, int k);

/// Greedy scan partitioning. Repeatedly scores every connected qubit group
/// of size <= k by how many still-unassigned gates it can collect from the
/// time frontier before a boundary-crossing gate cuts one of its wires,
/// then commits the best group as the next partition. Gates on a wire stop
/// being collectible as soon as any gate on that wire is skipped. Leftover
/// single-qubit gates on otherwise untouched qubits become width-1
/// pass-through partitions. The input must be SWAP-free.
///
/// Ties are broken by earliest first collected gate, then by the
/// lexicographically smallest sorted qubit set.
PartitionedCircuit scan_partition(const Circuit& c, int k);

struct PartitionNeighbors {
  std::set<int> preceding;
  std::set<int> succeeding;
};

/// For each qubit of partition i, the partition (if any) that last touched
/// that qubit before i in slot order, and symmetrically after.
PartitionNeighbors neighbor_partitions(const PartitionedCircuit& pc, int id);

/// Rebuild a flat circuit from the partitions in slot order. When
/// `replacements` is non-null it must have one entry per partition; an
/// engaged entry substitutes that partition's local subcircuit. Gates are
/// tagged with their partition id.
Circuit reassemble(const PartitionedCircuit& pc,
                   const std::vector<Circuit>* replacements = nullptr);

/// Debug dump: id, qubits, gate counts and neighbor ids per partition.
std::string partitions_to_json(const PartitionedCircuit& pc);

}  // namespace topas
