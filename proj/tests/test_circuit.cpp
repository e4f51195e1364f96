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

#include "topas/circuit.hpp"

#include "oracles.hpp"
#include "topas/error.hpp"
#include "topas/simulate.hpp"

#include <doctest.h>

using namespace topas;

TEST_CASE("stats: parallel and serialized CNOTs") {
  Circuit c(4);
  c.push(Gate::cnot(0, 1));
  c.push(Gate::cnot(2, 3));
  CircuitStats s = stats(c);
  CHECK(s.depth == 1);
  CHECK(s.cnot_count == 2);

  Circuit d(3);
  d.push(Gate::cnot(0, 1));
  d.push(Gate::cnot(1, 2));
  CHECK(stats(d).depth == 2);

  Circuit e(2);
  e.push(Gate::swap(0, 1));
  CHECK(stats(e).cnot_count == 3);
}

TEST_CASE("depth bounds") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = oracle::random_circuit(5, 40, rng);
    std::vector<int> per_qubit(5, 0);
    for (const Gate& g : c.gates) {
      ++per_qubit[g.q0];
      if (g.two_qubit()) ++per_qubit[g.q1];
    }
    const int busiest = *std::max_element(per_qubit.begin(), per_qubit.end());
    CHECK(stats(c).depth >= busiest);
  }
}

TEST_CASE("decompose_swaps") {
  Circuit c(2);
  c.push(Gate::swap(0, 1));
  const Circuit d = decompose_swaps(c);
  REQUIRE(d.gates.size() == 3);
  CHECK(d.gates[0].same_operation(Gate::cnot(0, 1)));
  CHECK(d.gates[1].same_operation(Gate::cnot(1, 0)));
  CHECK(d.gates[2].same_operation(Gate::cnot(0, 1)));

  Circuit plain(3);
  plain.push(Gate::cnot(0, 2));
  plain.push(Gate::u3(1, 0.3, 0.4, 0.5));
  CHECK(decompose_swaps(plain).same_gates(plain));
}

TEST_CASE("decompose_swaps preserves the unitary") {
  Rng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const int width = rng.range(2, 6);
    const Circuit c = oracle::random_circuit(width, 24, rng, 0.35);
    const Circuit d = decompose_swaps(c);
    for (const Gate& g : d.gates) CHECK(g.kind != Gate::Kind::Swap);
    CHECK(hs_distance(circuit_unitary(c), circuit_unitary(d)) < 1e-12);
  }
}

TEST_CASE("connectivity_graph counts interactions") {
  Circuit c(3);
  c.push(Gate::cnot(0, 1));
  c.push(Gate::cnot(0, 1));
  c.push(Gate::cnot(1, 2));
  const WeightedGraph g = connectivity_graph(c);
  CHECK(g.weight(0, 1) == 2);
  CHECK(g.weight(1, 2) == 1);
  CHECK(g.weight(0, 2) == 0);

  Circuit ones(3);
  ones.push(Gate::u3(0, 1, 2, 3));
  ones.push(Gate::u3(2, 1, 2, 3));
  CHECK(connectivity_graph(ones).weights.empty());
}

TEST_CASE("connectivity weights sum to the 2-qubit gate count") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = oracle::random_circuit(6, 50, rng);
    std::int64_t two_qubit = 0;
    for (const Gate& g : c.gates) two_qubit += g.two_qubit() ? 1 : 0;
    CHECK(connectivity_graph(c).total_weight() == two_qubit);
  }
}

TEST_CASE("adjacent CNOT cancellation") {
  Circuit c(3);
  c.push(Gate::cnot(0, 1));
  c.push(Gate::cnot(0, 1));
  c.push(Gate::cnot(1, 2));
  const Circuit out = cancel_adjacent_cnots(c);
  REQUIRE(out.gates.size() == 1);
  CHECK(out.gates[0].same_operation(Gate::cnot(1, 2)));

  // An intervening gate on either wire blocks cancellation.
  Circuit blocked(2);
  blocked.push(Gate::cnot(0, 1));
  blocked.push(Gate::u3(1, 0.1, 0.2, 0.3));
  blocked.push(Gate::cnot(0, 1));
  CHECK(cancel_adjacent_cnots(blocked).gates.size() == 3);

  // Cancellation cascades to a fixed point.
  Circuit nest(2);
  nest.push(Gate::cnot(0, 1));
  nest.push(Gate::cnot(1, 0));
  nest.push(Gate::cnot(1, 0));
  nest.push(Gate::cnot(0, 1));
  CHECK(cancel_adjacent_cnots(nest).gates.empty());
}

TEST_CASE("gate validation") {
  Circuit c(2);
  CHECK_THROWS_AS(c.push(Gate::cnot(0, 2)), Error);
  CHECK_THROWS_AS(c.push(Gate::cnot(1, 1)), Error);
  CHECK_THROWS_AS(c.push(Gate::u3(-1, 0, 0, 0)), Error);
}
