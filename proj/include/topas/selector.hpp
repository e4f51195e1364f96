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
#include "topas/partition.hpp"
#include "topas/topology.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace topas {

/// Bias factors by subtopology name; 1.0 when absent.
struct BiasTable {
  std::map<std::string, double> factors;

  double of(const std::string& name) const {
    const auto it = factors.find(name);
    return it == factors.end() ? 1.0 : it->second;
  }
};

/// Default biases for a physical topology spec. The mesh favors sparser
/// rings less: line 1.0, star 1.0, ring 0.8. Everything else is 1.0.
BiasTable default_bias(const std::string& topology_spec);

struct SubtopologyAssignment {
  int partition_id = -1;
  std::string name;
  Graph subtopology;             // prototype, vertices 0..k-1
  std::vector<int> permutation;  // prototype vertex -> partition local qubit
  Graph permuted;                // subtopology after relabeling
  double score = 0.0;            // bias(g) * similarity
  bool degenerate = false;       // edgeless interaction graph
};

/// Interaction graph of a partition augmented with the interactions of its
/// immediately preceding and succeeding neighbors that run between qubit
/// pairs shared with this partition, at full weight.
WeightedGraph neighbor_aware_graph(const Partition& p,
                                   const PartitionedCircuit& pc);

/// Flattened per-pair vectors over the k(k-1)/2 unordered pairs of [k],
/// in lexicographic pair order.
std::vector<std::int64_t> edge_weight_vector(const WeightedGraph& g);
std::vector<std::int64_t> indicator_vector(const Graph& g);

/// Normalized inner product <v_P, v_L> / sum(v_L), in [0, 1].
/// The sums are formed in integer arithmetic so equal scores compare
/// exactly equal no matter the evaluation order.
double similarity(const std::vector<std::int64_t>& v_p,
                  const std::vector<std::int64_t>& v_l);

/// Evaluate every candidate under every relabeling of its vertices and
/// return the biased-similarity argmax. Exact ties prefer fewer edges,
/// then candidate list order, then the lexicographically smallest
/// permutation. An edgeless g_l returns the first candidate (by
/// convention the line) with the identity permutation, flagged degenerate.
SubtopologyAssignment select_subtopology(const WeightedGraph& g_l,
                                         const std::vector<NamedGraph>& candidates,
                                         const BiasTable& bias);

}  // namespace topas
