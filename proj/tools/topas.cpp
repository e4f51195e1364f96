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

#include "topas/bench.hpp"
#include "topas/error.hpp"
#include "topas/kernels.hpp"
#include "topas/pipeline.hpp"
#include "topas/qasm.hpp"
#include "topas/routability.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

namespace {

struct CommonFlags {
  std::string topology = "mesh:4x4";
  int block_size = 4;
  double epsilon = 1e-10;
  double threshold = 0.30;
  std::uint64_t seed = 0;
  std::string mode = "topas";
  int workers = 1;
  bool pre_pass = false;
  std::string config_file;
  std::string routability_file;
  int routability_corpus = 16;
  std::string isa;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--topology", f.topology,
                  "Device: linear:N, mesh:RxC, falcon27, or file:PATH");
  cmd->add_option("--block-size", f.block_size, "Partition width (2..4)");
  cmd->add_option("--epsilon", f.epsilon, "Per-partition synthesis threshold");
  cmd->add_option("--threshold", f.threshold, "Replacement CNOT threshold");
  cmd->add_option("--seed", f.seed, "Base seed for all randomized stages");
  cmd->add_option("--mode", f.mode, "topas | post_mapping | map_only");
  cmd->add_option("--workers", f.workers, "Worker threads for synthesis");
  cmd->add_flag("--pre-pass", f.pre_pass,
                "Cancel adjacent identical CNOT pairs first");
  cmd->add_option("--config", f.config_file,
                  "key=value config file (overrides flags)");
  cmd->add_option("--routability-file", f.routability_file,
                  "Precomputed routability table (JSON)");
  cmd->add_option("--routability-corpus", f.routability_corpus,
                  "Corpus size for on-demand routability measurements");
  cmd->add_option("--isa", f.isa, "Force kernel ISA: scalar | avx2 | neon")
      ->group("");  // debugging aid, hidden from help
}

topas::PipelineConfig to_config(const CommonFlags& f) {
  topas::PipelineConfig cfg;
  cfg.topology = f.topology;
  cfg.block_size = f.block_size;
  cfg.epsilon = f.epsilon;
  cfg.replacement_threshold = f.threshold;
  cfg.seed = f.seed;
  cfg.mode = topas::mode_from_name(f.mode);
  cfg.workers = f.workers;
  cfg.pre_pass = f.pre_pass;
  cfg.routability_file = f.routability_file;
  cfg.routability_corpus = f.routability_corpus;
  if (!f.config_file.empty()) {
    topas::apply_config_file(cfg, f.config_file);
  }
  return cfg;
}

void maybe_force_isa(const std::string& name) {
  if (name.empty()) return;
  using topas::kernels::Isa;
  if (name == "scalar") topas::kernels::set_isa(Isa::Scalar);
  else if (name == "avx2") topas::kernels::set_isa(Isa::Avx2);
  else if (name == "neon") topas::kernels::set_isa(Isa::Neon);
  else throw topas::Error("unknown ISA '" + name + "'");
}

int cmd_compile(const CommonFlags& flags, const std::string& input,
                const std::string& out_path, const std::string& report_path,
                const std::string& dump_partitions) {
  maybe_force_isa(flags.isa);
  const topas::PipelineConfig cfg = to_config(flags);
  const topas::Circuit circuit = topas::read_qasm_file(input);

  if (!dump_partitions.empty()) {
    const topas::Circuit flat = topas::decompose_swaps(
        cfg.pre_pass ? topas::cancel_adjacent_cnots(circuit) : circuit);
    const auto pc = topas::scan_partition(flat, cfg.block_size);
    std::ofstream out(dump_partitions);
    if (!out) throw topas::Error("cannot write " + dump_partitions);
    out << topas::partitions_to_json(pc);
  }

  const topas::PipelineResult res = topas::run_pipeline(circuit, cfg);
  topas::write_qasm_file(res.mapped.circuit, out_path);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw topas::Error("cannot write " + report_path);
    out << topas::report_to_json(res.report);
  }
  std::cout << "cnots " << res.report.input.cnot_count << " -> "
            << res.report.output.cnot_count << ", depth "
            << res.report.input.depth << " -> " << res.report.output.depth
            << ", partitions " << res.report.partitions_synthesized
            << ", swaps " << res.report.swap_count << ", sum distance "
            << res.report.sum_distance << " (bound "
            << res.report.error_bound << ")\n";
  return 0;
}

int cmd_routability(const CommonFlags& flags, int corpus_size,
                    const std::string& out_path) {
  maybe_force_isa(flags.isa);
  const topas::PhysicalTopology phys = topas::build_topology(flags.topology);
  const topas::RoutabilityTable table =
      topas::build_routability_table(phys, corpus_size, flags.seed);
  const std::string text = topas::routability_to_json(table);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw topas::Error("cannot write " + out_path);
    out << text;
  }
  return 0;
}

int cmd_bench(const CommonFlags& flags, const std::string& dir,
              const std::string& csv_path) {
  maybe_force_isa(flags.isa);
  topas::PipelineConfig base = to_config(flags);

  std::vector<topas::BenchCase> suite;
  if (dir.empty()) {
    suite = topas::desk_benchmarks(base.seed);
  } else {
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.path().extension() == ".qasm") {
        suite.push_back({entry.path().stem().string(),
                         topas::read_qasm_file(entry.path().string())});
      }
    }
    std::sort(suite.begin(), suite.end(),
              [](const auto& a, const auto& b) { return a.name < b.name; });
    if (suite.empty()) throw topas::Error("no .qasm files in " + dir);
  }

  std::ostringstream csv;
  csv << topas::bench_csv_header();
  for (const auto& bc : suite) {
    for (const auto mode : {topas::PipelineMode::Topas,
                            topas::PipelineMode::PostMapping,
                            topas::PipelineMode::MapOnly}) {
      topas::PipelineConfig cfg = base;
      cfg.mode = mode;
      const topas::BenchRow row = topas::run_bench_case(bc, cfg);
      const std::string line = topas::bench_csv_row(row);
      csv << line;
      std::cout << line;
    }
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw topas::Error("cannot write " + csv_path);
    out << csv.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"topas: topology-aware logical circuit synthesis and mapping"};
  app.require_subcommand(1);

  CommonFlags flags;

  auto* compile = app.add_subcommand("compile", "Optimize and map a circuit");
  std::string input, out_path = "out.qasm", report_path, dump_partitions;
  compile->add_option("input", input, "Input OpenQASM 2.0 file")->required();
  compile->add_option("--out", out_path, "Output QASM path");
  compile->add_option("--report", report_path, "JSON report path");
  compile->add_option("--dump-partitions", dump_partitions,
                      "Write the partition structure as JSON");
  add_common(compile, flags);

  auto* routability = app.add_subcommand(
      "routability", "Measure internal-SWAP rates per block pattern");
  int corpus_size = 200;
  std::string routability_out;
  routability->add_option("--corpus-size", corpus_size, "Samples per pattern");
  routability->add_option("--out", routability_out, "Output JSON path");
  add_common(routability, flags);

  auto* bench = app.add_subcommand("bench", "Run the benchmark suite");
  std::string bench_dir, csv_path = "bench.csv";
  bench->add_option("dir", bench_dir,
                    "Directory of .qasm files (default: built-in suite)");
  bench->add_option("--csv", csv_path, "Output CSV path");
  add_common(bench, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (compile->parsed()) {
      return cmd_compile(flags, input, out_path, report_path, dump_partitions);
    }
    if (routability->parsed()) {
      return cmd_routability(flags, corpus_size, routability_out);
    }
    if (bench->parsed()) {
      return cmd_bench(flags, bench_dir, csv_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
