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

#include "topas/qasm.hpp"

#include "oracles.hpp"
#include "topas/error.hpp"

#include <doctest.h>

#include <numbers>

using namespace topas;

TEST_CASE("parse basic gates") {
  const Circuit c = parse_qasm(
      "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncx q[0],q[1];\n");
  CHECK(c.width == 2);
  REQUIRE(c.gates.size() == 1);
  CHECK(c.gates[0].same_operation(Gate::cnot(0, 1)));
}

TEST_CASE("h canonicalizes to U3(pi/2, 0, pi)") {
  const Circuit c = parse_qasm("OPENQASM 2.0;\nqreg q[1];\nh q[0];\n");
  REQUIRE(c.gates.size() == 1);
  const Gate& g = c.gates[0];
  CHECK(g.kind == Gate::Kind::U3);
  CHECK(g.theta == doctest::Approx(std::numbers::pi / 2));
  CHECK(g.phi == 0.0);
  CHECK(g.lambda == doctest::Approx(std::numbers::pi));
}

TEST_CASE("angle expressions") {
  const Circuit c = parse_qasm(
      "OPENQASM 2.0;\nqreg q[1];\n"
      "u3(pi/2, -pi/4, 2*pi/3) q[0];\nrz(-(pi+1)/2) q[0];\n");
  CHECK(c.gates[0].theta == doctest::Approx(std::numbers::pi / 2));
  CHECK(c.gates[0].phi == doctest::Approx(-std::numbers::pi / 4));
  CHECK(c.gates[0].lambda == doctest::Approx(2 * std::numbers::pi / 3));
  CHECK(c.gates[1].lambda == doctest::Approx(-(std::numbers::pi + 1) / 2));
}

TEST_CASE("malformed input is rejected with position info") {
  CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncx q[0];\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[2];\n"), ParseError);  // missing header
  CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0;\nqreg q[2];\nccx q[0],q[1];\n"),
                  ParseError);  // unsupported gate
  CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[5];\n"),
                  ParseError);  // out of range
  CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0;\nqreg q[2];\nqreg r[2];\n"),
                  ParseError);  // second register
  CHECK_THROWS_AS(
      parse_qasm("OPENQASM 2.0;\nqreg q[2];\nmeasure q[0] -> c[0];\n"),
      ParseError);  // unsupported construct is rejected, not skipped

  try {
    parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncx q[0];\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("emitted text") {
  Circuit c(3);
  c.push(Gate::cnot(0, 1));
  const std::string text = emit_qasm(c);
  CHECK(text.find("cx q[0],q[1];") != std::string::npos);
  CHECK(text.find("qreg q[3];") != std::string::npos);

  const Circuit empty(3);
  const std::string empty_text = emit_qasm(empty);
  CHECK(empty_text ==
        "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n");
}

TEST_CASE("round-trip identity on random circuits") {
  Rng rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = oracle::random_circuit(rng.range(1, 7), 50, rng, 0.2);
    const Circuit back = parse_qasm(emit_qasm(c));
    CHECK(back.same_gates(c));
  }
}
