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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "spinqft/costmodel.hpp"
#include "spinqft/error.hpp"
#include "spinqft/matrix_io.hpp"
#include "spinqft/nmrsim.hpp"
#include "spinqft/pulse_dsl.hpp"
#include "spinqft/qcore.hpp"
#include "spinqft/qftc.hpp"
#include "spinqft/tomo.hpp"
#include "support.hpp"

namespace spinqft::cli {

namespace {

using nlohmann::json;

constexpr double kVerifyTolerance = 1e-10;
constexpr double kRoundtripTolerance = 1e-8;
constexpr int kMaxVerifyQubits = 8;
constexpr int kMaxCostQubits = 1000;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json counts_json(const qft::GateCounts& c) {
  return {{"hadamard", c.hadamards},
          {"total_hadamard", c.total_hadamards},
          {"controlled_phase", c.controlled_phases},
          {"root_cnot", c.root_cnots},
          {"swap", c.swaps}};
}

json convention_json(const nmr::Convention& c) {
  return {{"pulse_sense", c.pulse_sense},
          {"coupling_sign", c.coupling_sign},
          {"composite_z", c.composite_z == nmr::CompositeZExpansion::standard ? "standard" : "caption_literal"}};
}

qft::Circuit build(const VerifyOptions& o) {
  if (!o.circuit_file.empty()) {
    json j;
    try {
      j = json::parse(read_file(o.circuit_file));
    } catch (const json::exception& e) {
      throw UsageError("circuit file '" + o.circuit_file + "': " + e.what());
    }
    auto c = qft::circuit_from_json(j);
    if (c.qubits() > kMaxVerifyQubits) throw UsageError("full-matrix verification is capped at 8 qubits");
    return c;
  }
  const auto d = qft::decomposition_from_string(o.decomposition);
  switch (d) {
    case qft::Decomposition::serial:
      return qft::build_serial(o.n);
    case qft::Decomposition::parallel:
      return qft::build_parallel(o.n);
    case qft::Decomposition::approximate:
      return qft::build_approximate(o.n, o.max_distance < 0 ? o.n : o.max_distance);
    case qft::Decomposition::custom:
      break;
  }
  throw UsageError("--decomp must be serial, parallel or approximate");
}

// Uniform-coupling three-spin system unless a two-spin chloroform molecule
// fits; `coupling` overrides J everywhere.
nmr::SpinSystem spin_system(int n, const std::optional<double>& coupling) {
  if (n == 2 && !coupling) return nmr::SpinSystem::chloroform();
  return nmr::SpinSystem::uniform(n, coupling.value_or(nmr::kChloroformJ));
}

nmr::ThermalWeights parse_weights(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--weights expects a,b");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string a = text.substr(0, comma);
    const std::string b = text.substr(comma + 1);
    nmr::ThermalWeights w{std::stod(a, &used_a), std::stod(b, &used_b)};
    if (used_a != a.size() || used_b != b.size() || !std::isfinite(w.a) || !std::isfinite(w.b)) {
      throw std::invalid_argument("trailing");
    }
    return w;
  } catch (const std::logic_error&) {
    throw UsageError("--weights expects two numbers a,b, got '" + text + "'");
  }
}

nmr::PulseSequence load_sequence(const SimulateOptions& o) {
  if (!o.sequence_file.empty()) return nmr::parse_sequence(read_file(o.sequence_file), "custom");
  const auto& names = nmr::table1_names();
  if (std::find(names.begin(), names.end(), o.sequence) != names.end()) return nmr::table1_sequence(o.sequence);
  return nmr::pseudopure_sequence(o.sequence);
}

DensityMatrix initial_state(const nmr::SpinSystem& sys, const nmr::ThermalWeights& w) {
  if (sys.spins() == 2) return nmr::prepare_pseudopure_temporal_avg(sys, w);
  return DensityMatrix::pseudopure_deviation(sys.spins());
}

std::optional<nmr::NoiseModel> noise_model(int n, const std::optional<double>& t2, const std::optional<double>& rate) {
  if (t2 && rate) throw UsageError("--t2 and --rate are exclusive");
  if (t2) {
    if (!(*t2 > 0.0) || !std::isfinite(*t2)) throw UsageError("--t2 must be positive");
    return nmr::NoiseModel::uniform(n, 1.0 / *t2);
  }
  if (rate) {
    if (!(*rate >= 0.0) || !std::isfinite(*rate)) throw UsageError("--rate must be >= 0");
    return nmr::NoiseModel::uniform(n, *rate);
  }
  return std::nullopt;
}

Matrix random_traceless_hermitian(int n, std::mt19937_64& gen) {
  std::normal_distribution<double> dist(0.0, 1.0);
  const Index dim = hilbert_dimension(n);
  Matrix g(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    for (Index c = 0; c < dim; ++c) {
      const double re = dist(gen);
      const double im = dist(gen);
      g(r, c) = Complex(re, im);
    }
  }
  Matrix h = g + g.adjoint();
  h -= Matrix::Identity(dim, dim) * (h.trace() / static_cast<double>(dim));
  return h;
}

}  // namespace

int run_verify(const VerifyOptions& o) {
  const auto circuit = build(o);
  const auto with_swaps = o.swaps ? qft::append_reversal_swaps(circuit) : circuit;
  const int n = with_swaps.qubits();
  const auto counts = qft::count_gates(with_swaps);
  const bool relabel = counts.swaps == 0;

  const UnitaryMatrix u = qft::circuit_unitary(with_swaps);
  const UnitaryMatrix compared = relabel ? bit_reversal_permutation(n) * u : u;
  const auto cmp = equal_up_to_global_phase(compared, dft_oracle(n), kVerifyTolerance);

  json report = {{"command", "verify"},
                 {"n", n},
                 {"decomposition", qft::to_string(with_swaps.decomposition())},
                 {"gate_counts", counts_json(counts)},
                 {"relabeled", relabel},
                 {"max_deviation", cmp.max_deviation},
                 {"global_phase_rad", cmp.phase},
                 {"tolerance", kVerifyTolerance},
                 {"passed", cmp.equal}};
  if (with_swaps.decomposition() == qft::Decomposition::approximate) {
    report["approximation_distance"] = with_swaps.approximation_distance();
  }
  if (with_swaps.decomposition() == qft::Decomposition::parallel && o.circuit_file.empty()) {
    auto serial = qft::build_serial(n);
    if (o.swaps) serial = qft::append_reversal_swaps(serial);
    const auto vs = equal_up_to_global_phase(u, qft::circuit_unitary(serial), kVerifyTolerance);
    report["parallel_vs_serial_deviation"] = vs.max_deviation;
    report["passed"] = cmp.equal && vs.equal;
  }
  if (!o.circuit_out.empty()) write_output(o.circuit_out, dump(qft::to_json(with_swaps)));
  write_output(o.out, dump(report));
  return report["passed"].get<bool>() ? kExitOk : kExitVerificationFailed;
}

int run_cost(const CostOptions& o) {
  const auto ranges = parse_ranges(o.n_ranges);
  if (ranges.front().first < 1 || ranges.back().second > kMaxCostQubits) {
    throw UsageError("--n must stay within 1.." + std::to_string(kMaxCostQubits));
  }
  cost::ArchitectureParams params;
  json params_json;
  if (o.model == "liquid") {
    cost::LiquidParams p;
    p.coupling_hz = o.coupling_hz;
    if (o.delta >= 0.0) p.delta = o.delta;
    p.validate();
    params = p;
    params_json = {{"delta", p.delta}, {"J", p.coupling_hz}, {"kappa", p.kappa()}};
  } else if (o.model == "solid") {
    cost::SolidParams p;
    p.dipolar_hz = o.dipolar_hz;
    p.swap_time = o.swap_time;
    if (o.delta >= 0.0) p.delta = o.delta;
    p.validate();
    params = p;
    params_json = {{"delta", p.delta}, {"d", p.dipolar_hz}, {"Delta", p.swap_time}, {"kappa", p.kappa()}};
  } else {
    throw UsageError("--model must be liquid or solid");
  }
  if (o.schedule != "serial" && o.schedule != "parallel") throw UsageError("--schedule must be serial or parallel");
  if (o.format != "csv" && o.format != "json") throw UsageError("--format must be csv or json");
  const auto schedule = o.schedule == "serial" ? cost::Schedule::serial : cost::Schedule::parallel;

  std::vector<cost::CostBreakdown> rows;
  for (const auto& [first, last] : ranges) {
    const auto part = cost::sweep(schedule, params, first, last);
    rows.insert(rows.end(), part.begin(), part.end());
  }

  const int n_max = ranges.back().second;
  const double ratio = cost::evaluate(cost::Schedule::serial, n_max, params).coupling_term /
                       cost::evaluate(cost::Schedule::parallel, n_max, params).coupling_term;

  if (o.format == "csv") {
    std::ostringstream csv;
    cost::write_csv(csv, rows);
    write_output(o.out, csv.str());
    std::cerr << "serial/parallel coupling-time ratio at n=" << n_max << ": " << ratio << " (limit 2)\n";
    return kExitOk;
  }
  json table = json::array();
  for (const auto& r : rows) table.push_back(cost::to_json(r));
  json report = {{"command", "cost"},
                 {"model", o.model},
                 {"schedule", o.schedule},
                 {"params", params_json},
                 {"rows", table},
                 {"coupling_ratio", {{"n", n_max}, {"serial_over_parallel", ratio}, {"limit", 2.0}}}};
  write_output(o.out, dump(report));
  return kExitOk;
}

int run_simulate(const SimulateOptions& o) {
  if (o.sequence.empty() == o.sequence_file.empty()) {
    throw UsageError("give exactly one of --sequence and --sequence-file");
  }
  if (o.perturb && !o.tomography) throw UsageError("--perturb needs --tomography");
  if (o.perturb && !(*o.perturb >= 0.0)) throw UsageError("--perturb must be >= 0");

  const auto seq = load_sequence(o);
  const int n = seq.spins();
  if (n > tomo::kMaxTomographyQubits) throw UsageError("simulation is capped at 4 spins");
  const auto sys = spin_system(n, o.coupling_hz);
  const auto weights = parse_weights(o.weights);
  const auto noise = noise_model(n, o.t2, o.rate);
  const auto conv = nmr::Convention::calibrated();

  const DensityMatrix input = initial_state(sys, weights);
  const DensityMatrix output = nmr::run(seq, sys, input, noise, conv);
  const DensityMatrix target = tomo::ideal_qft_output(input, !o.no_reverse);

  DensityMatrix scored = output;
  json tomo_json = nullptr;
  bool passed = true;
  if (o.tomography) {
    std::optional<tomo::Perturbation> perturb;
    if (o.perturb) perturb = tomo::Perturbation{*o.perturb, resolve_seed(o.seed)};
    const auto readouts = tomo::measure_all(output, perturb);
    const auto rec = tomo::reconstruct(readouts, output.trace());
    const double dev = max_abs_difference(rec.entries(), output.entries());
    tomo_json = {{"experiments", readouts.experiments.size()},
                 {"max_deviation", dev},
                 {"reconstructed", to_json(rec)}};
    if (perturb) {
      tomo_json["perturbation"] = {{"sigma", perturb->sigma}, {"seed", perturb->seed}};
    } else {
      tomo_json["tolerance"] = kRoundtripTolerance;
      passed = dev <= kRoundtripTolerance;
    }
    scored = rec;
  }

  json noise_json = nullptr;
  if (noise) noise_json = {{"dephasing_rates", noise->dephasing_rates}};
  json report = {{"command", "simulate"},
                 {"sequence", seq.name()},
                 {"spins", n},
                 {"elements", seq.elements().size()},
                 {"convention", convention_json(conv)},
                 {"relabeled", !o.no_reverse},
                 {"noise", noise_json},
                 {"input", to_json(input)},
                 {"output", to_json(output)},
                 {"target", to_json(target)},
                 {"fidelity", tomo::to_json(tomo::fidelity(target, scored, input))},
                 {"tomography", tomo_json},
                 {"passed", passed}};
  write_output(o.out, dump(report));
  return passed ? kExitOk : kExitVerificationFailed;
}

int run_tomo_roundtrip(const RoundtripOptions& o) {
  const auto seed = resolve_seed(o.seed);
  const auto design = tomo::design(o.n);
  std::mt19937_64 gen(seed);
  double worst = 0.0;
  for (int i = 0; i < o.count; ++i) {
    const DensityMatrix rho(o.n, random_traceless_hermitian(o.n, gen), DensityMatrix::Kind::deviation);
    const auto rec = tomo::reconstruct(tomo::measure_all(rho));
    worst = std::max(worst, max_abs_difference(rec.entries(), rho.entries()));
  }
  const bool passed = design.informationally_complete() && worst <= kRoundtripTolerance;
  json report = {{"command", "tomo-roundtrip"},
                 {"n", o.n},
                 {"count", o.count},
                 {"seed", seed},
                 {"experiments", tomo::all_experiments(o.n).size()},
                 {"observables_per_experiment", tomo::observables(o.n).size()},
                 {"design",
                  {{"rows", design.rows},
                   {"unknowns", design.unknowns},
                   {"rank", design.rank},
                   {"smallest_singular_value", design.smallest_singular_value},
                   {"largest_singular_value", design.largest_singular_value}}},
                 {"max_deviation", worst},
                 {"tolerance", kRoundtripTolerance},
                 {"passed", passed}};
  write_output(o.out, dump(report));
  return passed ? kExitOk : kExitVerificationFailed;
}

int run_export_fig2(const Fig2Options& o) {
  if (o.format != "csv" && o.format != "json") throw UsageError("--format must be csv or json");
  std::vector<std::string> names;
  std::stringstream ss(o.sequences);
  for (std::string name; std::getline(ss, name, ',');) {
    if (!name.empty()) names.push_back(name);
  }
  if (names.empty()) throw UsageError("--sequences is empty");

  std::vector<std::pair<std::string, DensityMatrix>> panels;
  for (const auto& name : names) {
    const auto seq = nmr::table1_sequence(name);
    const auto sys = spin_system(seq.spins(), std::nullopt);
    const auto noise = noise_model(seq.spins(), o.t2, std::nullopt);
    const DensityMatrix input = initial_state(sys, {});
    panels.emplace_back(name + ":theory", tomo::ideal_qft_output(input));
    panels.emplace_back(name + ":simulated", nmr::run(seq, sys, input, noise));
  }

  if (o.format == "csv") {
    std::ostringstream csv;
    tomo::write_bar_chart_csv(csv, panels);
    write_output(o.out, csv.str());
    return kExitOk;
  }
  json list = json::array();
  for (const auto& [name, rho] : panels) list.push_back({{"panel", name}, {"matrix", to_json(rho)}});
  write_output(o.out, dump({{"command", "export-fig2"}, {"panels", list}}));
  return kExitOk;
}

}  // namespace spinqft::cli
