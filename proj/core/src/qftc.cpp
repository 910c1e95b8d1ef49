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

#include "spinqft/qftc.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinqft/error.hpp"

namespace spinqft::qft {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_qubit(int q, int n) {
  if (q < 1 || q > n) {
    throw LabelError("qubit " + std::to_string(q) + " outside [1, " + std::to_string(n) + "]");
  }
}

void check_pair(int j, int k, int n) {
  check_qubit(j, n);
  check_qubit(k, n);
  if (j >= k) {
    throw LabelError("two-qubit gate needs control < target, got (" + std::to_string(j) + ", " +
                     std::to_string(k) + ")");
  }
}

void check_gate(const Gate& g, int n) {
  std::visit(overloaded{
                 [&](const Hadamard& h) { check_qubit(h.qubit, n); },
                 [](const TotalHadamard&) {},
                 [&](const ControlledPhase& p) { check_pair(p.control, p.target, n); },
                 [&](const RootCnot& r) {
                   check_pair(r.control, r.target, n);
                   if (!(r.exponent > 0.0 && r.exponent <= 1.0)) {
                     throw LabelError("root-of-CNOT exponent must lie in (0, 1]");
                   }
                 },
                 [&](const Swap& s) {
                   check_qubit(s.first, n);
                   check_qubit(s.second, n);
                   if (s.first == s.second) throw LabelError("SWAP of a qubit with itself");
                 },
             },
             g);
}

Matrix2 x_power(double alpha) {
  const Complex e = std::polar(1.0, std::numbers::pi * alpha);
  Matrix2 m;
  m << 0.5 * (1.0 + e), 0.5 * (1.0 - e), 0.5 * (1.0 - e), 0.5 * (1.0 + e);
  return m;
}

void check_size(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw SizeError("QFT size " + std::to_string(n) + " outside [1, " +
                    std::to_string(kMaxQubits) + "]");
  }
}

}  // namespace

std::string to_string(Decomposition d) {
  switch (d) {
    case Decomposition::serial: return "serial";
    case Decomposition::parallel: return "parallel";
    case Decomposition::approximate: return "approximate";
    case Decomposition::custom: return "custom";
  }
  return "custom";
}

Decomposition decomposition_from_string(const std::string& s) {
  if (s == "serial") return Decomposition::serial;
  if (s == "parallel") return Decomposition::parallel;
  if (s == "approximate") return Decomposition::approximate;
  if (s == "custom") return Decomposition::custom;
  throw UnknownNameError("unknown decomposition '" + s + "'");
}

Circuit::Circuit(int n, std::vector<Gate> gates, Decomposition decomposition,
                 int approximation_distance)
    : n_(n), gates_(std::move(gates)), decomposition_(decomposition), distance_(approximation_distance) {
  check_size(n);
  for (const auto& g : gates_) check_gate(g, n);
}

GateCounts count_gates(const Circuit& c) {
  GateCounts counts;
  for (const auto& g : c.gates()) {
    std::visit(overloaded{
                   [&](const Hadamard&) { ++counts.hadamards; },
                   [&](const TotalHadamard&) { ++counts.total_hadamards; },
                   [&](const ControlledPhase&) { ++counts.controlled_phases; },
                   [&](const RootCnot&) { ++counts.root_cnots; },
                   [&](const Swap&) { ++counts.swaps; },
               },
               g);
  }
  return counts;
}

double controlled_phase_angle(int j, int k) { return std::numbers::pi * std::ldexp(1.0, j - k); }

double root_cnot_exponent(int j, int k) { return std::ldexp(1.0, j - k); }

Circuit build_serial(int n) {
  check_size(n);
  std::vector<Gate> gates;
  for (int j = 1; j <= n; ++j) {
    gates.emplace_back(Hadamard{j});
    for (int k = j + 1; k <= n; ++k) {
      gates.emplace_back(ControlledPhase{j, k, controlled_phase_angle(j, k)});
    }
  }
  return Circuit(n, std::move(gates), Decomposition::serial);
}

Circuit build_parallel(int n) {
  check_size(n);
  std::vector<Gate> gates;
  gates.emplace_back(TotalHadamard{});
  for (int target = 2; target <= n; ++target) {
    for (int control = 1; control < target; ++control) {
      gates.emplace_back(RootCnot{control, target, root_cnot_exponent(control, target)});
    }
  }
  return Circuit(n, std::move(gates), Decomposition::parallel);
}

Circuit build_approximate(int n, int max_distance) {
  check_size(n);
  if (max_distance < 1 || max_distance > n) {
    throw SizeError("approximation distance " + std::to_string(max_distance) + " outside [1, " +
                    std::to_string(n) + "]");
  }
  std::vector<Gate> gates;
  const Circuit serial = build_serial(n);
  for (const auto& g : serial.gates()) {
    if (const auto* p = std::get_if<ControlledPhase>(&g); p && p->target - p->control > max_distance) {
      continue;
    }
    gates.push_back(g);
  }
  return Circuit(n, std::move(gates), Decomposition::approximate, max_distance);
}

Circuit append_reversal_swaps(const Circuit& c) {
  std::vector<Gate> gates = c.gates();
  const int n = c.qubits();
  for (int q = 1; q <= n / 2; ++q) gates.emplace_back(Swap{q, n + 1 - q});
  return Circuit(n, std::move(gates), c.decomposition(), c.approximation_distance());
}

void apply_gate(Matrix& m, const Gate& g, int n) {
  check_gate(g, n);
  std::visit(overloaded{
                 [&](const Hadamard& h) { apply_single_qubit(m, hadamard_matrix(), h.qubit, n); },
                 [&](const TotalHadamard&) {
                   for (int q = 1; q <= n; ++q) apply_single_qubit(m, hadamard_matrix(), q, n);
                 },
                 [&](const ControlledPhase& p) {
                   const auto mask = static_cast<Index>(basis::qubit_mask(p.control, n) |
                                                        basis::qubit_mask(p.target, n));
                   const Complex phase = std::polar(1.0, p.theta);
                   for (Index r = 0; r < m.rows(); ++r) {
                     if ((r & mask) == mask) m.row(r) *= phase;
                   }
                 },
                 [&](const RootCnot& r) {
                   const int controls[] = {r.control};
                   apply_controlled(m, x_power(r.exponent), controls, r.target, n);
                 },
                 [&](const Swap& s) {
                   const auto ma = static_cast<Index>(basis::qubit_mask(s.first, n));
                   const auto mb = static_cast<Index>(basis::qubit_mask(s.second, n));
                   for (Index r = 0; r < m.rows(); ++r) {
                     // rows with first=1, second=0 trade places with first=0, second=1
                     if ((r & ma) && !(r & mb)) m.row(r).swap(m.row((r & ~ma) | mb));
                   }
                 },
             },
             g);
}

UnitaryMatrix gate_unitary(const Gate& g, int n) {
  const Index dim = hilbert_dimension(n);
  Matrix m = Matrix::Identity(dim, dim);
  apply_gate(m, g, n);
  return UnitaryMatrix::unchecked(n, std::move(m));
}

UnitaryMatrix circuit_unitary(const Circuit& c) {
  const Index dim = hilbert_dimension(c.qubits());
  Matrix m = Matrix::Identity(dim, dim);
  for (const auto& g : c.gates()) apply_gate(m, g, c.qubits());
  return UnitaryMatrix::unchecked(c.qubits(), std::move(m));
}

std::vector<double> product_state_phases(std::uint64_t a, int n) {
  const Index dim = hilbert_dimension(n);
  if (a >= static_cast<std::uint64_t>(dim)) {
    throw SizeError("basis integer " + std::to_string(a) + " outside [0, " +
                    std::to_string(dim - 1) + "]");
  }
  std::vector<double> phi(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    double sum = 0.0;
    for (int k = 0; k <= n - 1 - j; ++k) {
      if ((a >> k) & 1U) sum += std::ldexp(1.0, j + k - n);
    }
    phi[static_cast<std::size_t>(j)] = sum;
  }
  return phi;
}

StateVector qft_product_state(std::uint64_t a, int n) {
  const auto phi = product_state_phases(a, n);
  std::vector<StateVector> factors;
  factors.reserve(phi.size());
  const double s = 1.0 / std::numbers::sqrt2;
  for (double p : phi) {
    Vector v(2);
    v << s, std::polar(s, 2.0 * std::numbers::pi * p);
    factors.emplace_back(1, std::move(v));
  }
  return tensor(std::span<const StateVector>(factors));
}

nlohmann::json to_json(const Gate& g) {
  return std::visit(
      overloaded{
          [](const Hadamard& h) -> nlohmann::json { return {{"kind", "hadamard"}, {"j", h.qubit}}; },
          [](const TotalHadamard&) -> nlohmann::json { return {{"kind", "total_hadamard"}}; },
          [](const ControlledPhase& p) -> nlohmann::json {
            return {{"kind", "controlled_phase"}, {"j", p.control}, {"k", p.target}, {"theta", p.theta}};
          },
          [](const RootCnot& r) -> nlohmann::json {
            return {{"kind", "root_cnot"}, {"j", r.control}, {"k", r.target}, {"alpha", r.exponent}};
          },
          [](const Swap& s) -> nlohmann::json { return {{"kind", "swap"}, {"j", s.first}, {"k", s.second}}; },
      },
      g);
}

nlohmann::json to_json(const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& g : c.gates()) gates.push_back(to_json(g));
  nlohmann::json out = {{"n", c.qubits()}, {"decomposition", to_string(c.decomposition())}, {"gates", std::move(gates)}};
  if (c.decomposition() == Decomposition::approximate) out["m"] = c.approximation_distance();
  return out;
}

Gate gate_from_json(const nlohmann::json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "hadamard") return Hadamard{j.at("j").get<int>()};
  if (kind == "total_hadamard") return TotalHadamard{};
  if (kind == "controlled_phase") {
    return ControlledPhase{j.at("j").get<int>(), j.at("k").get<int>(), j.at("theta").get<double>()};
  }
  if (kind == "root_cnot") {
    return RootCnot{j.at("j").get<int>(), j.at("k").get<int>(), j.at("alpha").get<double>()};
  }
  if (kind == "swap") return Swap{j.at("j").get<int>(), j.at("k").get<int>()};
  throw UnknownNameError("unknown gate kind '" + kind + "'");
}

Circuit circuit_from_json(const nlohmann::json& j) {
  std::vector<Gate> gates;
  for (const auto& g : j.at("gates")) gates.push_back(gate_from_json(g));
  return Circuit(j.at("n").get<int>(), std::move(gates),
                 decomposition_from_string(j.at("decomposition").get<std::string>()),
                 j.value("m", 0));
}

}  // namespace spinqft::qft
