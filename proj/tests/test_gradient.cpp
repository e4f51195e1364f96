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

#include "topas/ansatz.hpp"

#include "oracles.hpp"
#include "topas/simulate.hpp"
#include "topas/synthesize.hpp"

#include <doctest.h>

using namespace topas;

namespace {

AnsatzCircuit two_qubit_ansatz(int blocks) {
  AnsatzCircuit a;
  a.width = 2;
  a.allowed_edges = {{0, 1}};
  for (int i = 0; i < blocks; ++i) a.blocks.push_back({0, 1});
  return a;
}

ParamVector random_params(const AnsatzCircuit& a, Rng& rng) {
  ParamVector p(a.param_count());
  for (double& v : p) v = rng.uniform(0.0, 6.28);
  return p;
}

}  // namespace

TEST_CASE("ansatz circuit structure") {
  const AnsatzCircuit a = two_qubit_ansatz(2);
  CHECK(a.param_count() == 3 * (2 + 2 * 2));
  ParamVector p(a.param_count(), 0.0);
  const Circuit c = a.to_circuit(p);
  // U3 layer, then per block CNOT + 2 U3.
  CHECK(c.gates.size() == 2 + 2 * 3);
  int cnots = 0;
  for (const Gate& g : c.gates) cnots += g.kind == Gate::Kind::Cnot;
  CHECK(cnots == 2);
}

TEST_CASE("analytic gradient matches central finite differences") {
  Rng rng(314);
  for (int trial = 0; trial < 8; ++trial) {
    const AnsatzCircuit a = two_qubit_ansatz(1 + trial % 3);
    const ParamVector p = random_params(a, rng);
    const UnitaryMatrix target = random_unitary(4, rng);

    const ParamVector analytic = distance_gradient(a, p, target);
    const ParamVector numeric = oracle::fd_distance_gradient(a, p, target);
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(analytic[i] == doctest::Approx(numeric[i]).epsilon(1e-4).scale(1.0));
      CHECK(std::abs(analytic[i] - numeric[i]) < 1e-5);
    }
  }
}

TEST_CASE("gradient with respect to the objective, 100 seeds") {
  // Max component error of the objective gradient vs finite differences.
  Rng rng(2718);
  double worst = 0.0;
  for (int seed = 0; seed < 100; ++seed) {
    const AnsatzCircuit a = two_qubit_ansatz(1);
    const ParamVector p = random_params(a, rng);
    const UnitaryMatrix target = random_unitary(4, rng);
    AnsatzEvaluator eval(a, target);
    std::vector<double> grad(p.size());
    eval.value_and_gradient(p, grad);

    ParamVector work = p;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double h = 1e-6;
      work[i] = p[i] + h;
      const double up = eval.value(work);
      work[i] = p[i] - h;
      const double dn = eval.value(work);
      work[i] = p[i];
      worst = std::max(worst, std::abs(grad[i] - (up - dn) / (2 * h)));
    }
  }
  CHECK(worst < 1e-5);
}

TEST_CASE("gradient vanishes at a global minimum") {
  Rng rng(99);
  const AnsatzCircuit a = two_qubit_ansatz(2);
  const ParamVector p_star = random_params(a, rng);
  const UnitaryMatrix target = circuit_unitary(a.to_circuit(p_star));

  const ParamVector grad = distance_gradient(a, p_star, target);
  double norm = 0.0;
  for (double g : grad) norm += g * g;
  CHECK(std::sqrt(norm) < 1e-6);
}

TEST_CASE("gradient points downhill near a minimum") {
  Rng rng(123);
  const AnsatzCircuit a = two_qubit_ansatz(1);
  const ParamVector p_star = random_params(a, rng);
  const UnitaryMatrix target = circuit_unitary(a.to_circuit(p_star));

  ParamVector p = p_star;
  for (double& v : p) v += 0.05 * rng.normal();
  const double d0 = hs_distance(circuit_unitary(a.to_circuit(p)), target);
  const ParamVector grad = distance_gradient(a, p, target);

  // A small step against the gradient must reduce the distance.
  ParamVector stepped = p;
  double gnorm = 0.0;
  for (double g : grad) gnorm += g * g;
  REQUIRE(gnorm > 0.0);
  const double step = 0.05 / std::sqrt(gnorm);
  for (std::size_t i = 0; i < p.size(); ++i) stepped[i] -= step * grad[i];
  const double d1 = hs_distance(circuit_unitary(a.to_circuit(stepped)), target);
  CHECK(d1 < d0);
}

TEST_CASE("frozen prefixes reproduce the unfrozen objective") {
  Rng rng(555);
  AnsatzCircuit a;
  a.width = 3;
  a.allowed_edges = {{0, 1}, {1, 2}};
  a.blocks = {{0, 1}, {1, 2}, {0, 1}};
  const ParamVector p = random_params(a, rng);
  const UnitaryMatrix target = random_unitary(8, rng);

  AnsatzEvaluator full(a, target);
  const double f_full = full.value(p);

  const std::size_t frozen = 3 * (3 + 2);  // layer + first block
  AnsatzEvaluator partial(a, target, frozen, p);
  const std::vector<double> suffix(p.begin() + frozen, p.end());
  CHECK(partial.value(suffix) == doctest::Approx(f_full).epsilon(1e-12));

  // Gradient of the suffix agrees with the corresponding full components.
  std::vector<double> g_full(p.size()), g_suffix(suffix.size());
  full.value_and_gradient(p, g_full);
  partial.value_and_gradient(suffix, g_suffix);
  for (std::size_t i = 0; i < suffix.size(); ++i) {
    CHECK(g_suffix[i] == doctest::Approx(g_full[frozen + i]).epsilon(1e-10));
  }
}
