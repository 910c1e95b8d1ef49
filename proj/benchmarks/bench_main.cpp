// Copyright 2026 The spinqft Authors
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

#include <benchmark/benchmark.h>

#include "spinqft/costmodel.hpp"
#include "spinqft/nmrsim.hpp"
#include "spinqft/pulse_dsl.hpp"
#include "spinqft/qftc.hpp"
#include "spinqft/tomo.hpp"

namespace {

using namespace spinqft;

void BM_SerialCircuitUnitary(benchmark::State& state) {
  const auto c = qft::build_serial(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qft::circuit_unitary(c));
}
BENCHMARK(BM_SerialCircuitUnitary)->DenseRange(2, 10, 2);

void BM_ParallelCircuitUnitary(benchmark::State& state) {
  const auto c = qft::build_parallel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qft::circuit_unitary(c));
}
BENCHMARK(BM_ParallelCircuitUnitary)->DenseRange(2, 10, 2);

void BM_DftOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dft_oracle(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DftOracle)->DenseRange(2, 10, 2);

void BM_RunTableSequence(benchmark::State& state) {
  const auto& name = nmr::table1_names()[static_cast<std::size_t>(state.range(0))];
  const auto seq = nmr::table1_sequence(name);
  const auto sys = seq.spins() == 2 ? nmr::SpinSystem::chloroform() : nmr::SpinSystem::uniform(3);
  const auto in = DensityMatrix::pseudopure_deviation(seq.spins());
  const auto noise = nmr::NoiseModel::uniform(seq.spins(), 20.0);
  for (auto _ : state) benchmark::DoNotOptimize(nmr::run(seq, sys, in, noise));
  state.SetLabel(name);
}
BENCHMARK(BM_RunTableSequence)->DenseRange(0, 5);

void BM_ParseSequence(benchmark::State& state) {
  const auto text = nmr::library_source("serial-n3");
  for (auto _ : state) benchmark::DoNotOptimize(nmr::parse_sequence(text));
}
BENCHMARK(BM_ParseSequence);

void BM_TomographyRoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto rho = DensityMatrix::pseudopure_deviation(n);
  benchmark::DoNotOptimize(tomo::design(n));  // warm the design cache
  for (auto _ : state) benchmark::DoNotOptimize(tomo::reconstruct(tomo::measure_all(rho)));
}
BENCHMARK(BM_TomographyRoundTrip)->DenseRange(1, 4);

void BM_CostSweep(benchmark::State& state) {
  const cost::LiquidParams p;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cost::sweep(cost::Schedule::serial, p, 1, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_CostSweep)->Arg(10)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
