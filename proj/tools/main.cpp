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

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "spinqft/error.hpp"
#include "support.hpp"

int main(int argc, char** argv) {
  using namespace spinqft::cli;

  CLI::App app{"spinqft: QFT circuit verification, NMR pulse-sequence simulation and cost models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "spinqft 0.1.0");

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Check a QFT circuit against the DFT matrix");
  v->add_option("--n", verify.n, "Qubits")->check(CLI::Range(1, 8));
  v->add_option("--decomp", verify.decomposition, "serial, parallel or approximate")
      ->check(CLI::IsMember({"serial", "parallel", "approximate"}));
  v->add_option("--m", verify.max_distance, "Approximate QFT: largest k - j kept")->check(CLI::NonNegativeNumber);
  v->add_flag("--swaps", verify.swaps, "Append the qubit-reversal SWAPs instead of relabeling");
  v->add_option("--circuit", verify.circuit_file, "Verify a circuit JSON file instead")->check(CLI::ExistingFile);
  v->add_option("--circuit-out", verify.circuit_out, "Also write the circuit as JSON");
  v->add_option("--out", verify.out, "Report path (default stdout)");

  CostOptions cost;
  auto* c = app.add_subcommand("cost", "Sweep the time-cost model over n");
  c->add_option("--model", cost.model, "liquid or solid")->check(CLI::IsMember({"liquid", "solid"}));
  c->add_option("--schedule", cost.schedule, "serial or parallel")->check(CLI::IsMember({"serial", "parallel"}));
  c->add_option("--J", cost.coupling_hz, "Liquid: scalar coupling in Hz");
  c->add_option("--delta", cost.delta, "Single-qubit Hadamard time in s");
  c->add_option("--d", cost.dipolar_hz, "Solid: dipolar coupling in Hz");
  c->add_option("--Delta", cost.swap_time, "Solid: SWAP time in s");
  c->add_option("--n", cost.n_ranges, "Ranges such as 1..10,12..14");
  c->add_option("--format", cost.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  c->add_option("--out", cost.out, "Output path (default stdout)");

  SimulateOptions sim;
  auto* s = app.add_subcommand("simulate", "Run a pulse sequence on the pseudopure input and score it");
  auto* seq_opt = s->add_option("--sequence", sim.sequence, "Library sequence name");
  s->add_option("--sequence-file", sim.sequence_file, "Pulse-sequence DSL file")->excludes(seq_opt);
  auto* t2_opt = s->add_option("--t2", sim.t2, "Uniform dephasing time in s");
  s->add_option("--rate", sim.rate, "Uniform dephasing rate in Hz")->excludes(t2_opt);
  s->add_option("--J", sim.coupling_hz, "Uniform coupling in Hz");
  s->add_option("--weights", sim.weights, "Two-spin thermal weights a,b");
  s->add_flag("--tomography", sim.tomography, "Score the tomographic reconstruction");
  s->add_option("--perturb", sim.perturb, "Gaussian readout noise sigma");
  s->add_option("--seed", sim.seed, "Perturbation seed (default SPINQFT_SEED or fixed)");
  s->add_flag("--no-reverse", sim.no_reverse, "Compare without reverse-order relabeling");
  s->add_option("--out", sim.out, "Report path (default stdout)");

  RoundtripOptions rt;
  auto* r = app.add_subcommand("tomo-roundtrip", "Reconstruct random traceless Hermitian matrices");
  r->add_option("--n", rt.n, "Qubits")->check(CLI::Range(1, 4));
  r->add_option("--count", rt.count, "Random matrices")->check(CLI::Range(1, 100000));
  r->add_option("--seed", rt.seed, "Seed (default SPINQFT_SEED or fixed)");
  r->add_option("--out", rt.out, "Report path (default stdout)");

  Fig2Options fig;
  auto* f = app.add_subcommand("export-fig2", "Bar-chart table of simulated and ideal output matrices");
  f->add_option("--sequences", fig.sequences, "Comma-separated library sequences");
  f->add_option("--t2", fig.t2, "Uniform dephasing time in s");
  f->add_option("--format", fig.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  f->add_option("--out", fig.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*v) return run_verify(verify);
    if (*c) return run_cost(cost);
    if (*s) return run_simulate(sim);
    if (*r) return run_tomo_roundtrip(rt);
    if (*f) return run_export_fig2(fig);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const spinqft::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}
