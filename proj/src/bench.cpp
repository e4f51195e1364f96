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

#include <cstdio>
#include <numbers>
#include <sstream>

namespace topas {

namespace {

constexpr double kPi = std::numbers::pi;

void push_h(Circuit& c, int q) { c.push(Gate::u3(q, kPi / 2, 0.0, kPi)); }
void push_p(Circuit& c, int q, double a) { c.push(Gate::u3(q, 0.0, 0.0, a)); }
void push_t(Circuit& c, int q) { push_p(c, q, kPi / 4); }
void push_tdg(Circuit& c, int q) { push_p(c, q, -kPi / 4); }

// Controlled phase via two CNOTs and three phase gates.
void push_cp(Circuit& c, int control, int target, double a) {
  push_p(c, control, a / 2);
  c.push(Gate::cnot(control, target));
  push_p(c, target, -a / 2);
  c.push(Gate::cnot(control, target));
  push_p(c, target, a / 2);
}

// Standard 6-CNOT Toffoli network.
void push_toffoli(Circuit& c, int a, int b, int t) {
  push_h(c, t);
  c.push(Gate::cnot(b, t));
  push_tdg(c, t);
  c.push(Gate::cnot(a, t));
  push_t(c, t);
  c.push(Gate::cnot(b, t));
  push_tdg(c, t);
  c.push(Gate::cnot(a, t));
  push_t(c, b);
  push_t(c, t);
  push_h(c, t);
  c.push(Gate::cnot(a, b));
  push_t(c, a);
  push_tdg(c, b);
  c.push(Gate::cnot(a, b));
}

}  // namespace

Circuit make_qft(int n) {
  Circuit c(n);
  for (int i = 0; i < n; ++i) {
    push_h(c, i);
    for (int j = i + 1; j < n; ++j) {
      push_cp(c, j, i, kPi / static_cast<double>(1 << (j - i)));
    }
  }
  for (int i = 0; i < n / 2; ++i) {
    c.push(Gate::swap(i, n - 1 - i));
  }
  return c;
}

Circuit make_adder(int bits) {
  // Ripple-carry: wires [carry_in, b0, a0, b1, a1, ..., carry_out].
  const int n = 2 * bits + 2;
  Circuit c(n);
  const auto a_of = [](int i) { return 2 * i + 2; };
  const auto b_of = [](int i) { return 2 * i + 1; };
  const int cin = 0, cout = n - 1;

  const auto maj = [&](int x, int y, int z) {
    c.push(Gate::cnot(z, y));
    c.push(Gate::cnot(z, x));
    push_toffoli(c, x, y, z);
  };
  const auto uma = [&](int x, int y, int z) {
    push_toffoli(c, x, y, z);
    c.push(Gate::cnot(z, x));
    c.push(Gate::cnot(x, y));
  };

  maj(cin, b_of(0), a_of(0));
  for (int i = 1; i < bits; ++i) maj(a_of(i - 1), b_of(i), a_of(i));
  c.push(Gate::cnot(a_of(bits - 1), cout));
  for (int i = bits - 1; i >= 1; --i) uma(a_of(i - 1), b_of(i), a_of(i));
  uma(cin, b_of(0), a_of(0));
  return c;
}

Circuit make_random_circuit(int width, int cnots, std::uint64_t seed) {
  Rng rng(seed);
  Circuit c(width);
  for (int q = 0; q < width; ++q) {
    c.push(Gate::u3(q, rng.uniform(0.0, kPi), rng.uniform(0.0, 2 * kPi),
                    rng.uniform(0.0, 2 * kPi)));
  }
  for (int i = 0; i < cnots; ++i) {
    const int a = rng.range(0, width);
    int b = rng.range(0, width - 1);
    if (b >= a) ++b;
    c.push(Gate::cnot(a, b));
    c.push(Gate::u3(a, rng.uniform(0.0, kPi), rng.uniform(0.0, 2 * kPi),
                    rng.uniform(0.0, 2 * kPi)));
    c.push(Gate::u3(b, rng.uniform(0.0, kPi), rng.uniform(0.0, 2 * kPi),
                    rng.uniform(0.0, 2 * kPi)));
  }
  return c;
}

std::vector<BenchCase> desk_benchmarks(std::uint64_t seed) {
  std::vector<BenchCase> suite;
  suite.push_back({"qft4", make_qft(4)});
  suite.push_back({"qft5", make_qft(5)});
  suite.push_back({"qft6", make_qft(6)});
  suite.push_back({"adder2", make_adder(2)});   // 6 qubits
  suite.push_back({"adder4", make_adder(4)});   // 10 qubits
  suite.push_back({"random5x14", make_random_circuit(5, 14, mix_seed(seed, 1))});
  suite.push_back({"random6x18", make_random_circuit(6, 18, mix_seed(seed, 2))});
  suite.push_back({"random8x22", make_random_circuit(8, 22, mix_seed(seed, 3))});
  suite.push_back({"random10x26", make_random_circuit(10, 26, mix_seed(seed, 4))});
  suite.push_back({"random12x30", make_random_circuit(12, 30, mix_seed(seed, 5))});
  return suite;
}

BenchRow run_bench_case(const BenchCase& bc, const PipelineConfig& cfg) {
  const PipelineResult res = run_pipeline(bc.circuit, cfg);
  BenchRow row;
  row.benchmark = bc.name;
  row.mode = res.report.mode;
  row.cnots_in = res.report.input.cnot_count;
  row.cnots_out = res.report.output.cnot_count;
  row.depth_in = res.report.input.depth;
  row.depth_out = res.report.output.depth;
  row.partitions = res.report.partitions_synthesized;
  row.sum_distance = res.report.sum_distance;
  row.swaps = res.report.swap_count;
  row.seconds = res.report.seconds_total;
  return row;
}

std::string bench_csv_header() {
  return "benchmark,mode,cnots_in,cnots_out,depth_in,depth_out,N,"
         "sum_distance,swaps,seconds\n";
}

std::string bench_csv_row(const BenchRow& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s,%s,%d,%d,%d,%d,%d,%.3g,%d,%.3f\n",
                r.benchmark.c_str(), r.mode.c_str(), r.cnots_in, r.cnots_out,
                r.depth_in, r.depth_out, r.partitions, r.sum_distance, r.swaps,
                r.seconds);
  return buf;
}

}  // namespace topas
