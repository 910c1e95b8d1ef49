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

#pragma once

// QFT circuits as symbolic gate lists.
//
// Gate lists are in time order: gates.front() acts first, and the circuit
// unitary is the product with the first gate rightmost. The builders read
// the textbook operator product (H_1 B_12 ... B_1n)(H_2 B_23 ...)...(H_n)
// left to right, which is the order the NMR pulse tables use; with qubit 1
// as the most significant bit the serial circuit then equals P * F, where P
// is the bit reversal and F the DFT. Bit reversal is never emitted as gates
// by the builders: callers relabel instead.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinqft/qcore.hpp"

namespace spinqft::qft {

struct Hadamard {
  int qubit = 1;
  bool operator==(const Hadamard&) const = default;
};

/// H on every qubit at once.
struct TotalHadamard {
  bool operator==(const TotalHadamard&) const = default;
};

/// diag(1, 1, 1, e^{i theta}) on (control, target), control < target.
struct ControlledPhase {
  int control = 1;
  int target = 2;
  double theta = 0.0;
  bool operator==(const ControlledPhase&) const = default;
};

/// Controlled X^alpha, X^alpha = H diag(1, e^{i pi alpha}) H (principal power).
struct RootCnot {
  int control = 1;
  int target = 2;
  double exponent = 1.0;
  bool operator==(const RootCnot&) const = default;
};

struct Swap {
  int first = 1;
  int second = 2;
  bool operator==(const Swap&) const = default;
};

using Gate = std::variant<Hadamard, TotalHadamard, ControlledPhase, RootCnot, Swap>;

enum class Decomposition { serial, parallel, approximate, custom };

std::string to_string(Decomposition d);
Decomposition decomposition_from_string(const std::string& s);

class Circuit {
 public:
  /// Throws LabelError if any gate addresses a qubit outside [1, n] or has
  /// control >= target.
  Circuit(int n, std::vector<Gate> gates, Decomposition decomposition = Decomposition::custom,
          int approximation_distance = 0);

  int qubits() const noexcept { return n_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  Decomposition decomposition() const noexcept { return decomposition_; }
  /// m for approximate circuits, 0 otherwise.
  int approximation_distance() const noexcept { return distance_; }

  bool operator==(const Circuit&) const = default;

 private:
  int n_;
  std::vector<Gate> gates_;
  Decomposition decomposition_;
  int distance_;
};

struct GateCounts {
  int hadamards = 0;
  int controlled_phases = 0;
  int swaps = 0;
  int total_hadamards = 0;
  int root_cnots = 0;
  bool operator==(const GateCounts&) const = default;
};

GateCounts count_gates(const Circuit& c);

/// pi * 2^(j - k).
double controlled_phase_angle(int j, int k);
/// 2^(j - k).
double root_cnot_exponent(int j, int k);

/// H_1, B_12..B_1n, H_2, B_23..B_2n, ..., H_n.
Circuit build_serial(int n);
/// H_T, then U_1, ..., U_{n-1} with U_m = prod_j RootCnot(j, m+1, 2^(j-m-1)).
Circuit build_parallel(int n);
/// build_serial with every B_jk of k - j > m dropped; 1 <= m <= n.
Circuit build_approximate(int n, int max_distance);
/// Appends floor(n/2) SWAPs reversing the qubit order. For cost accounting.
Circuit append_reversal_swaps(const Circuit& c);

UnitaryMatrix gate_unitary(const Gate& g, int n);
UnitaryMatrix circuit_unitary(const Circuit& c);
/// Left-multiplies `m` by the gate's embedded unitary.
void apply_gate(Matrix& m, const Gate& g, int n);

/// phi_j = sum_{k=0}^{n-1-j} a_k 2^(j+k-n), j = 0..n-1, a_k the bits of a.
std::vector<double> product_state_phases(std::uint64_t a, int n);
/// Qubit m carries (|0> + e^{2 pi i phi_{m-1}} |1>)/sqrt(2); equals column a
/// of P * F.
StateVector qft_product_state(std::uint64_t a, int n);

nlohmann::json to_json(const Gate& g);
nlohmann::json to_json(const Circuit& c);
Gate gate_from_json(const nlohmann::json& j);
Circuit circuit_from_json(const nlohmann::json& j);

}  // namespace spinqft::qft
