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
#include "topas/pipeline.hpp"
#include "topas/rng.hpp"

#include <string>
#include <vector>

namespace topas {

/// Quantum Fourier transform over {U3, CNOT}: H plus controlled-phase
/// ladders (each CP decomposed into 2 CNOTs and 3 phase gates), final
/// qubit-reversal SWAPs included.
Circuit make_qft(int n);

/// Ripple-carry adder (in-place a+b) on 2*bits + 2 wires, Toffolis
/// decomposed into the standard 6-CNOT network.
Circuit make_adder(int bits);

/// Random circuit: an initial U3 layer, then `cnots` CNOTs on uniformly
/// random pairs, each followed by U3s on both wires.
Circuit make_random_circuit(int width, int cnots, std::uint64_t seed);

struct BenchCase {
  std::string name;
  Circuit circuit;
};

/// The desk-scale suite: QFT instances, adders, and seeded random
/// circuits, all at most 12 qubits wide.
std::vector<BenchCase> desk_benchmarks(std::uint64_t seed);

struct BenchRow {
  std::string benchmark;
  std::string mode;
  int cnots_in = 0, cnots_out = 0;
  int depth_in = 0, depth_out = 0;
  int partitions = 0;
  double sum_distance = 0.0;
  int swaps = 0;
  double seconds = 0.0;
};

BenchRow run_bench_case(const BenchCase& bc, const PipelineConfig& cfg);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row);

}  // namespace topas
