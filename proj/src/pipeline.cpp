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

#include "topas/pipeline.hpp"

#include "topas/error.hpp"
#include "topas/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <thread>

#include <json.hpp>

namespace topas {

const char* mode_name(PipelineMode mode) {
  switch (mode) {
    case PipelineMode::Topas:
      return "topas";
    case PipelineMode::PostMapping:
      return "post_mapping";
    case PipelineMode::MapOnly:
      return "map_only";
  }
  return "?";
}

PipelineMode mode_from_name(const std::string& name) {
  if (name == "topas") return PipelineMode::Topas;
  if (name == "post_mapping" || name == "post_mapping_baseline") {
    return PipelineMode::PostMapping;
  }
  if (name == "map_only" || name == "map_only_baseline") {
    return PipelineMode::MapOnly;
  }
  throw Error("unknown mode '" + name + "'");
}

namespace {

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void apply_config_file(PipelineConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error("config line " + std::to_string(lineno) +
                  ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "topology") {
        cfg.topology = value;
      } else if (key == "block-size") {
        cfg.block_size = std::stoi(value);
      } else if (key == "epsilon") {
        cfg.epsilon = std::stod(value);
      } else if (key == "threshold") {
        cfg.replacement_threshold = std::stod(value);
      } else if (key == "seed") {
        cfg.seed = std::stoull(value);
      } else if (key == "mode") {
        cfg.mode = mode_from_name(value);
      } else if (key == "workers") {
        cfg.workers = std::stoi(value);
      } else if (key == "pre-pass") {
        cfg.pre_pass = (value == "true" || value == "1" || value == "on");
      } else if (key == "sim-cap") {
        cfg.simulation_cap = std::stoi(value);
      } else if (key == "layout-iters") {
        cfg.layout_iters = std::stoi(value);
      } else if (key == "max-blocks") {
        cfg.synthesis.max_blocks = std::stoi(value);
      } else if (key == "restarts") {
        cfg.synthesis.optimizer.restarts = std::stoi(value);
      } else if (key == "max-iters") {
        cfg.synthesis.optimizer.max_iters = std::stoi(value);
      } else if (key == "leap-gap") {
        cfg.synthesis.leap_gap = std::stoi(value);
      } else if (key == "routability-corpus") {
        cfg.routability_corpus = std::stoi(value);
      } else if (key == "routability-file") {
        cfg.routability_file = value;
      } else if (key.rfind("bias.", 0) == 0) {
        cfg.bias.factors[key.substr(5)] = std::stod(value);
      } else {
        throw Error("unknown config key '" + key + "'");
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error("config line " + std::to_string(lineno) + ": bad value '" +
                  value + "' for key '" + key + "'");
    }
  }
}

bool choose_partition(const Partition& original, const Circuit& synthesized,
                      const PhysicalTopology& phys, RoutabilityTable& table,
                      double threshold, std::string* reason) {
  const int cn_orig = stats(original.sub).cnot_count;
  const int cn_syn = stats(synthesized).cnot_count;
  if (static_cast<double>(cn_orig) <
      (1.0 - threshold) * static_cast<double>(cn_syn)) {
    if (reason) {
      *reason = "original has >" + std::to_string(static_cast<int>(threshold * 100)) +
                "% fewer CNOTs (" + std::to_string(cn_orig) + " vs " +
                std::to_string(cn_syn) + ")";
    }
    return false;
  }
  const Graph orig_conn = connectivity_graph(original.sub).support();
  const Graph syn_conn = connectivity_graph(synthesized).support();
  const double r_orig = routability_score(orig_conn, phys, table);
  const double r_syn = routability_score(syn_conn, phys, table);
  if (r_orig < r_syn) {
    if (reason) {
      *reason = "original connectivity routes better (" +
                std::to_string(r_orig) + " vs " + std::to_string(r_syn) + ")";
    }
    return false;
  }
  if (reason) {
    *reason = "synthesized kept (" + std::to_string(cn_syn) + " CNOTs vs " +
              std::to_string(cn_orig) + ")";
  }
  return true;
}

namespace {

struct SynthTask {
  bool eligible = false;  // width >= 2 and internally interacting
  SubtopologyAssignment assignment;
  SynthesisResult synth;
};

// Deterministic worker pool over partition indices; results land in
// per-index slots so worker count never affects the outcome.
void for_each_index(int count, int workers, const std::function<void(int)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const int n_threads = std::min(workers, count);
  pool.reserve(n_threads);
  for (int t = 0; t < n_threads; ++t) {
    pool.emplace_back([&]() {
      while (true) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

RoutabilityTable prepare_routability(const PipelineConfig& cfg) {
  if (!cfg.routability_file.empty()) {
    return load_routability_table(cfg.routability_file);
  }
  RoutabilityTable table;
  table.topology = cfg.topology;
  table.corpus_size = cfg.routability_corpus;
  table.seed = 0x9a75;  // fixed so identical configs agree
  return table;
}

BiasTable effective_bias(const PipelineConfig& cfg) {
  if (!cfg.bias.factors.empty()) return cfg.bias;
  return default_bias(cfg.topology);
}

SynthesisConfig synthesis_config_for(const PipelineConfig& cfg,
                                     int partition_id) {
  SynthesisConfig s = cfg.synthesis;
  s.epsilon = cfg.epsilon;
  s.seed = mix_seed(cfg.seed, 0x5a17 + static_cast<std::uint64_t>(partition_id));
  return s;
}

// Shared by the topas flow and the post-mapping baseline: synthesize each
// eligible partition (parallel, deterministic), apply the replacement
// policy, and reassemble in slot order.
Circuit synthesize_and_replace(
    const PartitionedCircuit& pc, const PipelineConfig& cfg,
    const PhysicalTopology& phys, RoutabilityTable& table,
    const std::function<SubtopologyAssignment(const Partition&)>& select,
    RunReport& report) {
  const int count = static_cast<int>(pc.parts.size());
  std::vector<SynthTask> tasks(count);

  for_each_index(count, cfg.workers, [&](int i) {
    const Partition& p = pc.parts[i];
    SynthTask& task = tasks[i];
    if (p.pass_through || static_cast<int>(p.qubits.size()) < 2) return;
    if (connectivity_graph(p.sub).weights.empty()) return;  // degenerate
    task.assignment = select(p);
    if (task.assignment.degenerate) return;
    task.eligible = true;
    const UnitaryMatrix target = circuit_unitary(p.sub, cfg.simulation_cap);
    task.synth = synthesize(target, task.assignment.permuted,
                            synthesis_config_for(cfg, p.id));
  });

  std::vector<Circuit> replacements(count);
  for (int i = 0; i < count; ++i) {
    const Partition& p = pc.parts[i];
    const SynthTask& task = tasks[i];
    PartitionOutcome outcome;
    outcome.id = p.id;
    outcome.qubits = p.qubits;
    outcome.pass_through = p.pass_through;
    outcome.cnots_original = stats(p.sub).cnot_count;
    replacements[i] = p.sub;

    if (!task.eligible) {
      outcome.degenerate = !p.pass_through;
      outcome.reason = p.pass_through ? "pass-through" : "no interactions";
      report.partitions.push_back(std::move(outcome));
      continue;
    }
    ++report.partitions_synthesized;
    outcome.subtopology = task.assignment.name;
    outcome.permutation = task.assignment.permutation;
    outcome.selector_score = task.assignment.score;
    outcome.cnots_synthesized = task.synth.cnots;
    outcome.distance = task.synth.distance;
    outcome.synth_converged = task.synth.converged;
    outcome.blocks_explored = task.synth.nodes_explored;

    bool keep = false;
    if (!task.synth.converged) {
      outcome.reason = "synthesis budget exhausted; original kept";
    } else {
      keep = choose_partition(p, task.synth.circuit, phys, table,
                              cfg.replacement_threshold, &outcome.reason);
    }
    outcome.kept_synthesized = keep;
    if (keep) {
      replacements[i] = task.synth.circuit;
      report.sum_distance += task.synth.distance;
    } else {
      report.replaced_ids.push_back(p.id);
    }
    report.partitions.push_back(std::move(outcome));
  }

  report.partitions_total = count;
  report.error_bound = cfg.epsilon * report.partitions_synthesized;
  return reassemble(pc, &replacements);
}

void fill_output_stats(PipelineResult& res) {
  res.report.output = stats(res.mapped.circuit);
  res.report.swap_count = res.mapped.swap_count;
  res.report.internal_swap_rates = internal_swap_stats(res.mapped);
  res.report.initial_placement = res.mapped.initial_placement;
  res.report.final_placement = res.mapped.final_placement;
}

}  // namespace

PipelineResult run_topas(const Circuit& input, const PipelineConfig& cfg) {
  if (cfg.block_size < 2 || cfg.block_size > 4) {
    throw Error("block size must be 2..4");
  }
  const PhysicalTopology phys = build_topology(cfg.topology);
  if (input.width > phys.graph.order) {
    throw WidthError("circuit is wider than the device");
  }
  const double t0 = now_seconds();

  PipelineResult res;
  res.report.mode = mode_name(PipelineMode::Topas);
  res.report.topology = cfg.topology;
  res.report.seed = cfg.seed;
  res.report.epsilon = cfg.epsilon;
  res.report.input = stats(input);

  Circuit c = cfg.pre_pass ? cancel_adjacent_cnots(input) : input;
  c = decompose_swaps(c);

  const PartitionedCircuit pc = scan_partition(c, cfg.block_size);
  const double t1 = now_seconds();
  res.report.seconds_partition = t1 - t0;

  RoutabilityTable table = prepare_routability(cfg);
  const BiasTable bias = effective_bias(cfg);
  // Candidate sets per width, from the device graph.
  std::vector<std::vector<NamedGraph>> candidates(cfg.block_size + 1);
  for (int w = 2; w <= cfg.block_size; ++w) {
    candidates[w] = embedded_subtopologies(phys, w);
    if (candidates[w].empty()) {
      throw Error("no embedded subtopologies of order " + std::to_string(w));
    }
  }

  Circuit rebuilt = synthesize_and_replace(
      pc, cfg, phys, table,
      [&](const Partition& p) {
        const WeightedGraph g_l = neighbor_aware_graph(p, pc);
        return select_subtopology(g_l, candidates[p.qubits.size()], bias);
      },
      res.report);
  const double t2 = now_seconds();
  res.report.seconds_synthesis = t2 - t1;

  const Placement placement = sabre_layout(
      rebuilt, phys, cfg.layout_iters, mix_seed(cfg.seed, 0x1a1), cfg.routing);
  res.mapped = sabre_route(rebuilt, phys, placement,
                           mix_seed(cfg.seed, 0x1a2), cfg.routing);
  const double t3 = now_seconds();
  res.report.seconds_mapping = t3 - t2;
  res.report.seconds_total = t3 - t0;

  fill_output_stats(res);
  return res;
}

namespace {

PipelineResult run_map_only(const Circuit& input, const PipelineConfig& cfg) {
  const PhysicalTopology phys = build_topology(cfg.topology);
  if (input.width > phys.graph.order) {
    throw WidthError("circuit is wider than the device");
  }
  const double t0 = now_seconds();
  PipelineResult res;
  res.report.mode = mode_name(PipelineMode::MapOnly);
  res.report.topology = cfg.topology;
  res.report.seed = cfg.seed;
  res.report.epsilon = cfg.epsilon;
  res.report.input = stats(input);

  const Circuit c = decompose_swaps(input);
  const Placement placement = sabre_layout(
      c, phys, cfg.layout_iters, mix_seed(cfg.seed, 0x1a1), cfg.routing);
  res.mapped = sabre_route(c, phys, placement, mix_seed(cfg.seed, 0x1a2),
                           cfg.routing);
  const double t1 = now_seconds();
  res.report.seconds_mapping = t1 - t0;
  res.report.seconds_total = t1 - t0;
  fill_output_stats(res);
  return res;
}

PipelineResult run_post_mapping(const Circuit& input,
                                const PipelineConfig& cfg) {
  if (cfg.block_size < 2 || cfg.block_size > 4) {
    throw Error("block size must be 2..4");
  }
  const PhysicalTopology phys = build_topology(cfg.topology);
  if (input.width > phys.graph.order) {
    throw WidthError("circuit is wider than the device");
  }
  const double t0 = now_seconds();
  PipelineResult res;
  res.report.mode = mode_name(PipelineMode::PostMapping);
  res.report.topology = cfg.topology;
  res.report.seed = cfg.seed;
  res.report.epsilon = cfg.epsilon;
  res.report.input = stats(input);

  // Map first.
  const Circuit c = decompose_swaps(input);
  const Placement placement = sabre_layout(
      c, phys, cfg.layout_iters, mix_seed(cfg.seed, 0x1a1), cfg.routing);
  MappedCircuit mapped = sabre_route(c, phys, placement,
                                     mix_seed(cfg.seed, 0x1a2), cfg.routing);
  const double t1 = now_seconds();
  res.report.seconds_mapping = t1 - t0;

  // Partition the mapped circuit and synthesize onto the physical
  // subgraphs its blocks occupy.
  Circuit flat = mapped.circuit;
  for (Gate& g : flat.gates) g.tag = -1;
  const PartitionedCircuit pc = scan_partition(flat, cfg.block_size);
  const double t2 = now_seconds();
  res.report.seconds_partition = t2 - t1;

  RoutabilityTable table = prepare_routability(cfg);
  Circuit rebuilt = synthesize_and_replace(
      pc, cfg, phys, table,
      [&](const Partition& p) {
        // Induced physical subgraph over the partition's wires.
        std::vector<Edge> local_edges;
        for (std::size_t a = 0; a < p.qubits.size(); ++a) {
          for (std::size_t b = a + 1; b < p.qubits.size(); ++b) {
            if (phys.graph.has_edge(p.qubits[a], p.qubits[b])) {
              local_edges.push_back({static_cast<int>(a), static_cast<int>(b)});
            }
          }
        }
        SubtopologyAssignment sa;
        sa.partition_id = p.id;
        sa.subtopology = Graph(static_cast<int>(p.qubits.size()), local_edges);
        sa.permuted = sa.subtopology;
        sa.permutation.resize(p.qubits.size());
        for (std::size_t i = 0; i < p.qubits.size(); ++i) {
          sa.permutation[i] = static_cast<int>(i);
        }
        sa.name = graph_key(sa.subtopology);
        sa.degenerate = sa.subtopology.edges.empty();
        return sa;
      },
      res.report);
  const double t3 = now_seconds();
  res.report.seconds_synthesis = t3 - t2;
  res.report.seconds_total = t3 - t0;

  res.mapped = std::move(mapped);
  res.mapped.circuit = std::move(rebuilt);
  res.mapped.internal_swaps.clear();  // spans predate the routing pass
  fill_output_stats(res);
  return res;
}

}  // namespace

PipelineResult run_baseline(const Circuit& c, const PipelineConfig& cfg) {
  switch (cfg.mode) {
    case PipelineMode::PostMapping:
      return run_post_mapping(c, cfg);
    case PipelineMode::MapOnly:
      return run_map_only(c, cfg);
    case PipelineMode::Topas:
      break;
  }
  throw Error("run_baseline requires a baseline mode");
}

PipelineResult run_pipeline(const Circuit& c, const PipelineConfig& cfg) {
  if (cfg.mode == PipelineMode::Topas) return run_topas(c, cfg);
  return run_baseline(c, cfg);
}

std::string report_to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["mode"] = r.mode;
  j["topology"] = r.topology;
  j["seed"] = r.seed;
  j["epsilon"] = r.epsilon;
  j["input"] = {{"cnots", r.input.cnot_count},
                {"depth", r.input.depth},
                {"width", r.input.width}};
  j["output"] = {{"cnots", r.output.cnot_count},
                 {"depth", r.output.depth},
                 {"width", r.output.width}};
  j["partitions_total"] = r.partitions_total;
  j["partitions_synthesized"] = r.partitions_synthesized;
  j["error_bound"] = r.error_bound;
  j["sum_distance"] = r.sum_distance;
  j["swap_count"] = r.swap_count;
  j["replaced_ids"] = r.replaced_ids;
  auto parts = nlohmann::ordered_json::array();
  for (const PartitionOutcome& p : r.partitions) {
    nlohmann::ordered_json pj;
    pj["id"] = p.id;
    pj["qubits"] = p.qubits;
    pj["pass_through"] = p.pass_through;
    pj["degenerate"] = p.degenerate;
    pj["cnots_original"] = p.cnots_original;
    if (p.cnots_synthesized >= 0) {
      pj["subtopology"] = p.subtopology;
      pj["permutation"] = p.permutation;
      pj["selector_score"] = p.selector_score;
      pj["cnots_synthesized"] = p.cnots_synthesized;
      pj["distance"] = p.distance;
      pj["synth_converged"] = p.synth_converged;
      pj["blocks_explored"] = p.blocks_explored;
      pj["kept_synthesized"] = p.kept_synthesized;
    }
    pj["reason"] = p.reason;
    parts.push_back(std::move(pj));
  }
  j["partitions"] = std::move(parts);
  auto swaps = nlohmann::ordered_json::object();
  for (const auto& [id, rate] : r.internal_swap_rates) {
    swaps[std::to_string(id)] = rate;
  }
  j["internal_swap_rates"] = std::move(swaps);
  j["initial_placement"] = r.initial_placement.phys_of;
  j["final_placement"] = r.final_placement.phys_of;
  j["timings"] = {{"partition_s", r.seconds_partition},
                  {"synthesis_s", r.seconds_synthesis},
                  {"mapping_s", r.seconds_mapping},
                  {"total_s", r.seconds_total}};
  return j.dump(2) + "\n";
}

}  // namespace topas
