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
#include "topas/matrix.hpp"

#include <span>
#include <vector>

namespace topas {

using ParamVector = std::vector<double>;

/// Parameterized circuit template: one U3 per qubit, then `blocks`, each a
/// CNOT on an allowed edge followed by a U3 on both of its qubits. CNOT
/// control is the lower edge endpoint. Parameter count is
/// 3 * (width + 2 * blocks).
struct AnsatzCircuit {
  int width = 0;
  std::vector<Edge> allowed_edges;  // the subtopology's edges
  std::vector<Edge> blocks;

  std::size_t param_count() const {
    return 3 * (width + 2 * blocks.size());
  }

  /// Concrete circuit at the given parameter values.
  Circuit to_circuit(std::span<const double> params) const;
};

/// Evaluates 1 - |Tr(T^dag U(p))|^2 / N^2 and its analytic gradient via
/// one forward and one backward sweep (adjoint method, O(gates * N^2)).
/// A frozen parameter prefix is folded into a cached constant product so
/// later optimization touches only the suffix.
class AnsatzEvaluator {
public:
  AnsatzEvaluator(const AnsatzCircuit& ansatz, const CMatrix& target,
                  std::size_t frozen_params = 0,
                  std::span<const double> frozen_values = {});

  std::size_t free_count() const { return total_params_ - frozen_params_; }
  std::size_t total_params() const { return total_params_; }

  /// Objective at the given free-parameter values.
  double value(std::span<const double> free_params);

  /// Objective plus gradient (grad.size() == free_count()).
  double value_and_gradient(std::span<const double> free_params,
                            std::span<double> grad);

  static double distance_from_objective(double f);

private:
  struct EGate {
    bool is_u3;
    int q0, q1;          // q1 used by CNOT only
    std::size_t offset;  // first parameter index (U3); next offset for CNOT
  };

  void apply_egate(CMatrix& m, const EGate& g, std::span<const double> params,
                   bool transposed) const;
  double objective_from_u(cplx tr) const;

  int width_;
  std::size_t dim_;
  std::size_t total_params_;
  std::size_t frozen_params_;
  std::vector<EGate> gates_;      // full sequence
  std::size_t first_free_gate_;   // gates_[i] for i < this are frozen
  CMatrix target_;
  CMatrix prefix_;                // product of the frozen gates
  std::vector<double> frozen_;    // frozen parameter values

  // Workspaces reused across evaluations.
  std::vector<CMatrix> prefix_stack_;
  CMatrix u_, wt_;
};

/// Gradient of hs_distance(ansatz(params), target) for the full parameter
/// vector. The sqrt makes the distance non-smooth at zero, so the division
/// is guarded below distances of 1e-8.
ParamVector distance_gradient(const AnsatzCircuit& ansatz,
                              const ParamVector& params,
                              const CMatrix& target);

}  // namespace topas
