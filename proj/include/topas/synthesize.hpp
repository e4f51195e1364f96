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

#include "topas/ansatz.hpp"
#include "topas/graph.hpp"
#include "topas/matrix.hpp"

#include <cstdint>
#include <optional>

namespace topas {

struct OptimizerConfig {
  int restarts = 4;        // random starts per instantiation
  int max_iters = 1000;    // L-BFGS iteration cap per start
  double grad_tol = 1e-12; // max-norm stopping threshold on the gradient
};

struct SynthesisConfig {
  double epsilon = 1e-10;  // success threshold on the achieved distance
  int max_blocks = 14;
  OptimizerConfig optimizer;
  int leap_gap = 3;        // min blocks between prefix-freezing checkpoints
  double heuristic_weight = 1.0 / 64.0;  // cost per block in the search
  std::uint64_t seed = 0;
  std::size_t max_nodes = 0;  // optional safety cap; 0 = unlimited
};

struct InstantiateResult {
  ParamVector params;  // full parameter vector (frozen prefix included)
  double distance = 1.0;
  double objective = 1.0;
  int iterations = 0;
};

struct InstantiateOptions {
  std::optional<ParamVector> warm_start;  // full-length initial guess
  std::size_t frozen_params = 0;          // prefix pinned at warm_start values
  std::uint64_t salt = 0;                 // node identity for start seeding
};

/// Numerically fit the ansatz parameters against the target: L-BFGS with
/// Armijo backtracking on 1 - |Tr(T^dag U)|^2 / N^2, best over the warm
/// start (when given) and cfg.optimizer.restarts random starts, stopping
/// early once the distance reaches cfg.epsilon.
InstantiateResult instantiate(const AnsatzCircuit& ansatz,
                              const CMatrix& target,
                              const SynthesisConfig& cfg,
                              const InstantiateOptions& opts = {});

struct SynthesisResult {
  Circuit circuit;
  double distance = 1.0;
  int cnots = 0;
  int blocks = 0;
  bool converged = false;  // false = block budget exhausted (best effort)
  int nodes_explored = 0;
  // Instantiated distances along the accepted root-to-solution path,
  // before the final re-optimization.
  std::vector<double> path_distances;
};

/// Best-first search over block counts: start from the bare U3 layer and
/// append one CNOT+U3 block per subtopology edge, ordering the frontier by
/// distance + heuristic_weight * blocks; children warm-start from their
/// parent. Whenever the best distance improves by 10x at least leap_gap
/// blocks past the last checkpoint, the search freezes the parameter
/// prefix and restarts from that node (with a full re-optimization of the
/// final result). Success means distance <= cfg.epsilon; otherwise the
/// best circuit found within max_blocks is returned flagged.
SynthesisResult synthesize(const CMatrix& target, const Graph& subtopology,
                           const SynthesisConfig& cfg);

}  // namespace topas
