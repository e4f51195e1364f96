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

#include "topas/simulate.hpp"

#include "oracles.hpp"
#include "topas/error.hpp"

#include <doctest.h>

#include <numbers>

using namespace topas;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("empty circuit gives the identity") {
  const Circuit c(2);
  CHECK(circuit_unitary(c).max_abs_diff(CMatrix::identity(4)) == 0.0);
}

TEST_CASE("U3 specializations") {
  // U3(0,0,0) = I on any wire.
  CHECK(gate_unitary(Gate::u3(1, 0, 0, 0), 3)
            .max_abs_diff(CMatrix::identity(8)) < 1e-15);
  // U3(pi, 0, pi) = X.
  const CMatrix x = oracle::matrix2(0, 1, 1, 0);
  CHECK(gate_unitary(Gate::u3(0, kPi, 0, kPi), 1).max_abs_diff(x) < 1e-15);
}

TEST_CASE("CNOT(0,1) swaps |10> and |11> (qubit 0 most significant)") {
  const UnitaryMatrix u = gate_unitary(Gate::cnot(0, 1), 2);
  CMatrix want(4);
  want(0, 0) = 1;
  want(1, 1) = 1;
  want(2, 3) = 1;  // |11> -> |10>
  want(3, 2) = 1;  // |10> -> |11>
  CHECK(u.max_abs_diff(want) == 0.0);
}

TEST_CASE("gate embedding matches explicit Kronecker construction") {
  // CNOT(0,1) in a 3-qubit register is CNOT (x) I under MSB-first ordering.
  const CMatrix cnot4 = oracle::cnot_permutation(2, 0, 1);
  const CMatrix expect = oracle::kron(cnot4, oracle::identity(2));
  CHECK(gate_unitary(Gate::cnot(0, 1), 3).max_abs_diff(expect) == 0.0);

  // U3 on the last qubit is I (x) u.
  const Gate g = Gate::u3(2, 0.3, 1.1, -0.4);
  const auto u = u3_matrix(0.3, 1.1, -0.4);
  const CMatrix expect2 =
      oracle::kron(oracle::identity(4), oracle::matrix2(u[0], u[1], u[2], u[3]));
  CHECK(gate_unitary(g, 3).max_abs_diff(expect2) < 1e-15);

  // CNOT with control below target, embedded mid-register.
  const CMatrix expect3 = oracle::kron(
      oracle::identity(2), oracle::cnot_permutation(2, 1, 0));
  CHECK(gate_unitary(Gate::cnot(2, 1), 3).max_abs_diff(expect3) == 0.0);
}

TEST_CASE("random circuits stay unitary") {
  Rng rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    const Circuit c = oracle::random_circuit(4, 20, rng);
    CHECK(circuit_unitary(c).unitarity_defect() < 1e-12);
  }
}

TEST_CASE("unitary of a concatenation is the product") {
  Rng rng(45);
  const Circuit a = oracle::random_circuit(3, 15, rng);
  const Circuit b = oracle::random_circuit(3, 15, rng);
  Circuit ab(3);
  for (const Gate& g : a.gates) ab.push(g);
  for (const Gate& g : b.gates) ab.push(g);
  // First-executed rightmost: U(ab) = U(b) * U(a).
  const CMatrix expect = circuit_unitary(b).mul(circuit_unitary(a));
  CHECK(circuit_unitary(ab).max_abs_diff(expect) < 1e-12);
}

TEST_CASE("width above the cap is rejected") {
  const Circuit c(11);
  CHECK_THROWS_AS(circuit_unitary(c), WidthError);
  CHECK_NOTHROW(circuit_unitary(Circuit(4), 4));
  CHECK_THROWS_AS(circuit_unitary(Circuit(5), 4), WidthError);
}

TEST_CASE("qubit permutation matrices relabel wires") {
  Rng rng(46);
  const Circuit c = oracle::random_circuit(3, 12, rng, 0.0);
  // Relabel wires by sigma and compare P U P^dag against the simulator.
  const std::vector<int> sigma = {2, 0, 1};
  Circuit relabeled(3);
  for (const Gate& g : c.gates) {
    Gate r = g;
    r.q0 = sigma[g.q0];
    if (g.two_qubit()) r.q1 = sigma[g.q1];
    relabeled.push(r);
  }
  const UnitaryMatrix p = qubit_permutation_matrix(3, sigma);
  const CMatrix expect = p.mul(circuit_unitary(c)).mul(p.adjoint());
  CHECK(circuit_unitary(relabeled).max_abs_diff(expect) < 1e-12);
}
