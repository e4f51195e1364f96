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

#include "topas/selector.hpp"

#include "topas/error.hpp"

#include <algorithm>
#include <numeric>

namespace topas {

BiasTable default_bias(const std::string& topology_spec) {
  BiasTable bias;
  if (topology_spec.rfind("mesh:", 0) == 0) {
    bias.factors["line"] = 1.0;
    bias.factors["star"] = 1.0;
    bias.factors["ring"] = 0.8;
  }
  return bias;
}

WeightedGraph neighbor_aware_graph(const Partition& p,
                                   const PartitionedCircuit& pc) {
  WeightedGraph g;
  g.order = static_cast<int>(p.qubits.size());
  for (const Gate& gate : p.sub.gates) {
    if (gate.two_qubit()) g.add(gate.q0, gate.q1);
  }

  const PartitionNeighbors nb = neighbor_partitions(pc, p.id);
  std::vector<int> neighbor_ids(nb.preceding.begin(), nb.preceding.end());
  neighbor_ids.insert(neighbor_ids.end(), nb.succeeding.begin(),
                      nb.succeeding.end());
  for (int j : neighbor_ids) {
    const Partition& other = pc.parts[j];
    for (const Gate& gate : other.sub.gates) {
      if (!gate.two_qubit()) continue;
      const int ga = other.global_of(gate.q0);
      const int gb = other.global_of(gate.q1);
      // Both endpoints must be shared with p.
      if (std::binary_search(p.qubits.begin(), p.qubits.end(), ga) &&
          std::binary_search(p.qubits.begin(), p.qubits.end(), gb)) {
        g.add(p.local_of(ga), p.local_of(gb));
      }
    }
  }
  return g;
}

namespace {

int pair_index(int k, int a, int b) {
  // Lexicographic index of pair (a<b) among the k(k-1)/2 pairs.
  if (a > b) std::swap(a, b);
  return a * (2 * k - a - 1) / 2 + (b - a - 1);
}

}  // namespace

std::vector<std::int64_t> edge_weight_vector(const WeightedGraph& g) {
  std::vector<std::int64_t> v(g.order * (g.order - 1) / 2, 0);
  for (const auto& [e, w] : g.weights) {
    v[pair_index(g.order, e.first, e.second)] = w;
  }
  return v;
}

std::vector<std::int64_t> indicator_vector(const Graph& g) {
  std::vector<std::int64_t> v(g.order * (g.order - 1) / 2, 0);
  for (const auto& [a, b] : g.edges) {
    v[pair_index(g.order, a, b)] = 1;
  }
  return v;
}

double similarity(const std::vector<std::int64_t>& v_p,
                  const std::vector<std::int64_t>& v_l) {
  if (v_p.size() != v_l.size()) {
    throw DimensionError("similarity vector length mismatch");
  }
  std::int64_t num = 0, den = 0;
  for (std::size_t i = 0; i < v_p.size(); ++i) {
    num += v_p[i] * v_l[i];
    den += v_l[i];
  }
  if (den <= 0) throw Error("similarity needs a positive total weight");
  return static_cast<double>(num) / static_cast<double>(den);
}

SubtopologyAssignment select_subtopology(const WeightedGraph& g_l,
                                         const std::vector<NamedGraph>& candidates,
                                         const BiasTable& bias) {
  if (candidates.empty()) throw Error("no candidate subtopologies");
  const int k = g_l.order;
  for (const NamedGraph& c : candidates) {
    if (c.graph.order != k) {
      throw DimensionError("candidate order does not match interaction graph");
    }
  }

  std::vector<int> identity(k);
  std::iota(identity.begin(), identity.end(), 0);

  if (g_l.total_weight() == 0) {
    SubtopologyAssignment out;
    out.name = candidates.front().name;
    out.subtopology = candidates.front().graph;
    out.permutation = identity;
    out.permuted = out.subtopology;
    out.score = 0.0;
    out.degenerate = true;
    return out;
  }

  const auto v_l = edge_weight_vector(g_l);

  SubtopologyAssignment best;
  bool have_best = false;
  std::size_t best_edges = 0;
  std::size_t best_candidate_index = 0;

  for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
    const NamedGraph& cand = candidates[ci];
    const double b = bias.of(cand.name);
    std::vector<int> perm = identity;
    do {
      const Graph permuted = cand.graph.relabel(perm);
      const double score = b * similarity(indicator_vector(permuted), v_l);
      bool take = !have_best || score > best.score;
      if (!take && score == best.score) {
        // Fewest edges, then candidate order, then smallest permutation.
        if (cand.graph.edges.size() < best_edges) {
          take = true;
        } else if (cand.graph.edges.size() == best_edges &&
                   ci == best_candidate_index && perm < best.permutation) {
          take = true;
        }
      }
      if (take) {
        best.name = cand.name;
        best.subtopology = cand.graph;
        best.permutation = perm;
        best.permuted = permuted;
        best.score = score;
        best_edges = cand.graph.edges.size();
        best_candidate_index = ci;
        have_best = true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return best;
}

}  // namespace topas
