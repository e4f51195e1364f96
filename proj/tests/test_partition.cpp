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

#include "topas/partition.hpp"

#include "oracles.hpp"
#include "topas/error.hpp"

#include <doctest.h>

#include <map>

using namespace topas;

namespace {

// Per-qubit gate sequences must read identically through the partitions in
// slot order and through the original circuit.
void check_order_preservation(const Circuit& original,
                              const PartitionedCircuit& pc) {
  const Circuit rebuilt = reassemble(pc);
  REQUIRE(rebuilt.gates.size() == original.gates.size());
  for (int q = 0; q < original.width; ++q) {
    std::vector<Gate> want, got;
    for (const Gate& g : original.gates) {
      if (g.q0 == q || (g.two_qubit() && g.q1 == q)) want.push_back(g);
    }
    for (const Gate& g : rebuilt.gates) {
      if (g.q0 == q || (g.two_qubit() && g.q1 == q)) got.push_back(g);
    }
    REQUIRE(want.size() == got.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
      CHECK(want[i].same_operation(got[i]));
    }
  }
}

}  // namespace

TEST_CASE("the 4-CNOT hand example") {
  Circuit c(5);
  c.push(Gate::cnot(0, 1));
  c.push(Gate::cnot(1, 2));
  c.push(Gate::cnot(3, 4));
  c.push(Gate::cnot(2, 3));

  const PartitionedCircuit pc = scan_partition(c, 3);
  REQUIRE(pc.parts.size() == 2);
  CHECK(pc.parts[0].qubits == std::vector<int>{0, 1, 2});
  REQUIRE(pc.parts[0].sub.gates.size() == 2);
  CHECK(pc.parts[0].sub.gates[0].same_operation(Gate::cnot(0, 1)));
  CHECK(pc.parts[0].sub.gates[1].same_operation(Gate::cnot(1, 2)));
  CHECK(pc.parts[1].qubits == std::vector<int>{2, 3, 4});
  REQUIRE(pc.parts[1].sub.gates.size() == 2);
  CHECK(pc.parts[1].sub.gates[0].same_operation(Gate::cnot(1, 2)));  // 3,4
  CHECK(pc.parts[1].sub.gates[1].same_operation(Gate::cnot(0, 1)));  // 2,3

  // Neighbor relation via shared qubit 2.
  const PartitionNeighbors nb = neighbor_partitions(pc, 1);
  CHECK(nb.preceding == std::set<int>{0});
  CHECK(nb.succeeding.empty());
  const PartitionNeighbors nb0 = neighbor_partitions(pc, 0);
  CHECK(nb0.succeeding == std::set<int>{1});
}

TEST_CASE("single CNOT forms one 2-qubit partition") {
  Circuit c(4);
  c.push(Gate::cnot(1, 3));
  const PartitionedCircuit pc = scan_partition(c, 4);
  REQUIRE(pc.parts.size() == 1);
  CHECK(pc.parts[0].qubits == std::vector<int>{1, 3});
}

TEST_CASE("single-qubit gates are absorbed or passed through") {
  Circuit c(3);
  c.push(Gate::u3(0, 0.1, 0.2, 0.3));  // leading, absorbed
  c.push(Gate::cnot(0, 1));
  c.push(Gate::u3(2, 0.4, 0.5, 0.6));  // untouched wire -> pass-through
  const PartitionedCircuit pc = scan_partition(c, 2);
  REQUIRE(pc.parts.size() == 2);
  CHECK(pc.parts[0].qubits == std::vector<int>{0, 1});
  CHECK(pc.parts[0].sub.gates.size() == 2);
  CHECK(pc.parts[1].pass_through);
  CHECK(pc.parts[1].qubits == std::vector<int>{2});

  // A circuit with no 2-qubit gates at all: pass-throughs only.
  Circuit ones(2);
  ones.push(Gate::u3(1, 1, 2, 3));
  const PartitionedCircuit pc1 = scan_partition(ones, 2);
  REQUIRE(pc1.parts.size() == 1);
  CHECK(pc1.parts[0].pass_through);
}

TEST_CASE("partition properties over random circuits") {
  Rng rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    const int width = rng.range(5, 13);
    const int gates = rng.range(20, 151);
    const int k = rng.range(2, 5);
    const Circuit c = oracle::random_circuit(width, gates, rng, 0.0);
    const PartitionedCircuit pc = scan_partition(c, k);

    // Gate conservation as a multiset (count by operation signature).
    std::size_t total = 0;
    for (const Partition& p : pc.parts) total += p.sub.gates.size();
    CHECK(total == c.gates.size());

    const WeightedGraph conn = connectivity_graph(c);
    for (const Partition& p : pc.parts) {
      CHECK(static_cast<int>(p.qubits.size()) <= k);
      CHECK(!p.qubits.empty());
      // Local gates stay in local range and map back into the qubit set.
      for (const Gate& g : p.sub.gates) {
        CHECK(g.q0 < static_cast<int>(p.qubits.size()));
      }
      // Connectivity: the qubit set induces a connected subgraph of the
      // circuit interaction graph (pass-throughs are single vertices).
      if (p.qubits.size() >= 2) {
        std::vector<Edge> induced;
        for (std::size_t a = 0; a < p.qubits.size(); ++a) {
          for (std::size_t b = a + 1; b < p.qubits.size(); ++b) {
            if (conn.weight(p.qubits[a], p.qubits[b]) > 0) {
              induced.push_back({static_cast<int>(a), static_cast<int>(b)});
            }
          }
        }
        CHECK(Graph(static_cast<int>(p.qubits.size()), induced).connected());
      }
    }

    check_order_preservation(c, pc);

    // Determinism.
    const PartitionedCircuit pc2 = scan_partition(c, k);
    REQUIRE(pc2.parts.size() == pc.parts.size());
    for (std::size_t i = 0; i < pc.parts.size(); ++i) {
      CHECK(pc2.parts[i].qubits == pc.parts[i].qubits);
      CHECK(pc2.parts[i].sub.same_gates(pc.parts[i].sub));
    }
  }
}

TEST_CASE("neighbor relation is converse-symmetric") {
  Rng rng(515);
  const Circuit c = oracle::random_circuit(8, 60, rng, 0.0);
  const PartitionedCircuit pc = scan_partition(c, 3);
  for (int i = 0; i < static_cast<int>(pc.parts.size()); ++i) {
    const PartitionNeighbors nb = neighbor_partitions(pc, i);
    for (int j : nb.succeeding) {
      CHECK(neighbor_partitions(pc, j).preceding.count(i) == 1);
    }
    for (int j : nb.preceding) {
      CHECK(neighbor_partitions(pc, j).succeeding.count(i) == 1);
    }
  }
  CHECK_THROWS_AS(neighbor_partitions(pc, -1), Error);
  CHECK_THROWS_AS(neighbor_partitions(pc, 10000), Error);
}

TEST_CASE("disjoint partitions have no neighbors") {
  Circuit c(4);
  c.push(Gate::cnot(0, 1));
  c.push(Gate::cnot(2, 3));
  const PartitionedCircuit pc = scan_partition(c, 2);
  REQUIRE(pc.parts.size() == 2);
  for (int i = 0; i < 2; ++i) {
    const PartitionNeighbors nb = neighbor_partitions(pc, i);
    CHECK(nb.preceding.empty());
    CHECK(nb.succeeding.empty());
  }
}

TEST_CASE("enumerate_groups rejects k < 2 and swap-bearing circuits fail") {
  WeightedGraph g;
  g.order = 3;
  CHECK_THROWS_AS(enumerate_groups(g, 1), Error);
  Circuit c(2);
  c.push(Gate::swap(0, 1));
  CHECK_THROWS_AS(scan_partition(c, 2), Error);
}

TEST_CASE("partition JSON dump") {
  Circuit c(3);
  c.push(Gate::cnot(0, 1));
  c.push(Gate::cnot(1, 2));
  const PartitionedCircuit pc = scan_partition(c, 2);
  const std::string json = partitions_to_json(pc);
  CHECK(json.find("\"id\": 0") != std::string::npos);
  CHECK(json.find("\"qubits\": [0,1]") != std::string::npos);
}

TEST_CASE("neighbor-converse holds in the traced example") {
  // check converse-symmetry explicitly on the hand example too
  Circuit c(5);
  c.push(Gate::cnot(0, 1));
  c.push(Gate::cnot(1, 2));
  c.push(Gate::cnot(3, 4));
  c.push(Gate::cnot(2, 3));
  const PartitionedCircuit pc = scan_partition(c, 3);
  CHECK(neighbor_partitions(pc, 0).succeeding.count(1) == 1);
  CHECK(neighbor_partitions(pc, 1).preceding.count(0) == 1);
}
