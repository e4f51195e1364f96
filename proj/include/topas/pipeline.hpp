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
#include "topas/partition.hpp"
#include "topas/routability.hpp"
#include "topas/sabre.hpp"
#include "topas/selector.hpp"
#include "topas/simulate.hpp"
#include "topas/synthesize.hpp"
#include "topas/topology.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace topas {

enum class PipelineMode { Topas, PostMapping, MapOnly };

const char* mode_name(PipelineMode mode);
PipelineMode mode_from_name(const std::string& name);

struct PipelineConfig {
  std::string topology = "mesh:4x4";
  int block_size = 4;          // 2..4
  double epsilon = 1e-10;
  double replacement_threshold = 0.30;
  std::uint64_t seed = 0;
  PipelineMode mode = PipelineMode::Topas;
  int simulation_cap = kDefaultSimulationCap;
  int workers = 1;             // worker threads for per-partition synthesis
  bool pre_pass = false;       // adjacent identical-CNOT cancellation
  BiasTable bias;              // empty -> default_bias(topology)
  SynthesisConfig synthesis;   // epsilon and seeds are overridden per run
  RoutingParams routing;
  int layout_iters = 4;
  int routability_corpus = 16; // on-demand measurement corpus
  std::string routability_file;  // optional precomputed table (JSON)
};

/// Overlay "key = value" lines onto a config; config files win over flags.
/// Recognized keys mirror the CLI flags; "bias.<name> = x" sets a bias
/// factor. '#' starts a comment.
void apply_config_file(PipelineConfig& cfg, const std::string& path);

struct PartitionOutcome {
  int id = -1;
  std::vector<int> qubits;
  bool pass_through = false;
  bool degenerate = false;  // no internal interactions; kept as-is
  std::string subtopology;
  std::vector<int> permutation;
  double selector_score = 0.0;
  int cnots_original = 0;
  int cnots_synthesized = -1;  // -1 = not synthesized
  double distance = 0.0;       // of the synthesized candidate
  bool synth_converged = false;
  int blocks_explored = 0;
  bool kept_synthesized = false;
  std::string reason;  // why original/synthesized was kept
};

struct RunReport {
  std::string mode;
  std::string topology;
  std::uint64_t seed = 0;
  double epsilon = 0.0;
  CircuitStats input;
  CircuitStats output;
  int partitions_total = 0;
  int partitions_synthesized = 0;  // N in the error bound
  double error_bound = 0.0;        // N * epsilon
  double sum_distance = 0.0;       // over kept synthesized partitions
  int swap_count = 0;
  std::vector<PartitionOutcome> partitions;
  std::map<int, double> internal_swap_rates;
  std::vector<int> replaced_ids;  // partitions where the original was kept
  Placement initial_placement;
  Placement final_placement;
  double seconds_partition = 0.0;
  double seconds_synthesis = 0.0;
  double seconds_mapping = 0.0;
  double seconds_total = 0.0;
};

struct PipelineResult {
  MappedCircuit mapped;
  RunReport report;
};

/// Replacement policy: keep the original block when it has more than
/// `threshold` fewer CNOTs than the synthesized one, or when its
/// interaction pattern routes strictly better. Returns true to keep the
/// synthesized block; `reason` explains the call.
bool choose_partition(const Partition& original, const Circuit& synthesized,
                      const PhysicalTopology& phys, RoutabilityTable& table,
                      double threshold, std::string* reason);

/// Full flow: optional pre-pass, SWAP decomposition, scan partitioning,
/// per-partition subtopology selection + synthesis + replacement, slot
/// order reassembly, then layout and routing.
PipelineResult run_topas(const Circuit& c, const PipelineConfig& cfg);

/// Comparison flows: PostMapping maps first and synthesizes blocks of the
/// mapped circuit onto their induced physical subgraphs; MapOnly just lays
/// out and routes.
PipelineResult run_baseline(const Circuit& c, const PipelineConfig& cfg);

/// Dispatch on cfg.mode.
PipelineResult run_pipeline(const Circuit& c, const PipelineConfig& cfg);

/// Report as versioned JSON (schema_version 1). Wall-clock fields live
/// under "timings" so byte comparison can drop them.
std::string report_to_json(const RunReport& report);

}  // namespace topas
