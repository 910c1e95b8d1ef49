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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "spinqft/error.hpp"
#include "spinqft/qftc.hpp"

namespace spinqft::qft {
namespace {

using oracle::CMatrix;

// Dense oracle for one gate, assembled from Kronecker products.
CMatrix oracle_gate(const Gate& g, int n) {
  if (const auto* h = std::get_if<Hadamard>(&g)) return oracle::hadamard(h->qubit, n);
  if (std::holds_alternative<TotalHadamard>(g)) {
    CMatrix m = CMatrix::Identity(1 << n, 1 << n);
    for (int q = 1; q <= n; ++q) m = oracle::hadamard(q, n) * m;
    return m;
  }
  if (const auto* b = std::get_if<ControlledPhase>(&g)) return oracle::controlled_phase(b->control, b->target, b->theta, n);
  if (const auto* r = std::get_if<RootCnot>(&g)) return oracle::root_cnot(r->control, r->target, r->exponent, n);
  const auto& s = std::get<Swap>(g);
  CMatrix m = CMatrix::Zero(1 << n, 1 << n);
  for (int x = 0; x < (1 << n); ++x) {
    const int bj = (x >> (n - s.first)) & 1;
    const int bk = (x >> (n - s.second)) & 1;
    int y = x & ~(1 << (n - s.first)) & ~(1 << (n - s.second));
    y |= bk << (n - s.first);
    y |= bj << (n - s.second);
    m(y, x) = 1.0;
  }
  return m;
}

CMatrix oracle_circuit(const Circuit& c) {
  CMatrix m = CMatrix::Identity(1 << c.qubits(), 1 << c.qubits());
  for (const auto& g : c.gates()) m = oracle_gate(g, c.qubits()) * m;
  return m;
}

TEST(BuildSerial, GateOrderIsTimeOrder) {
  EXPECT_EQ(build_serial(1).gates(), (std::vector<Gate>{Hadamard{1}}));
  const auto c = build_serial(2);
  ASSERT_EQ(c.gates().size(), 3u);
  EXPECT_EQ(c.gates()[0], Gate(Hadamard{1}));
  EXPECT_EQ(c.gates()[1], Gate(ControlledPhase{1, 2, std::numbers::pi / 2}));
  EXPECT_EQ(c.gates()[2], Gate(Hadamard{2}));
  EXPECT_EQ(c.decomposition(), Decomposition::serial);
}

TEST(BuildSerial, Counts) {
  for (int n = 1; n <= 10; ++n) {
    const auto k = count_gates(build_serial(n));
    EXPECT_EQ(k.hadamards, n);
    EXPECT_EQ(k.controlled_phases, n * (n - 1) / 2);
    EXPECT_EQ(k.swaps, 0);
  }
  EXPECT_THROW(build_serial(0), SizeError);
  EXPECT_THROW(build_serial(13), SizeError);
}

TEST(BuildParallel, Structure) {
  EXPECT_EQ(build_parallel(1).gates(), (std::vector<Gate>{TotalHadamard{}}));
  const auto two = build_parallel(2);
  EXPECT_EQ(two.gates(), (std::vector<Gate>{TotalHadamard{}, RootCnot{1, 2, 0.5}}));
  const auto three = build_parallel(3);
  // U_1 then U_2 = (fourth root on 1,3)(square root on 2,3).
  EXPECT_EQ(three.gates(),
            (std::vector<Gate>{TotalHadamard{}, RootCnot{1, 2, 0.5}, RootCnot{1, 3, 0.25}, RootCnot{2, 3, 0.5}}));
  const auto k = count_gates(build_parallel(6));
  EXPECT_EQ(k.total_hadamards, 1);
  EXPECT_EQ(k.root_cnots, 15);
}

TEST(BuildApproximate, DropsDistantRotations) {
  EXPECT_EQ(build_approximate(3, 3).gates(), build_serial(3).gates());
  EXPECT_EQ(build_approximate(3, 2).gates(), build_serial(3).gates());
  EXPECT_EQ(build_approximate(2, 1).gates(), build_serial(2).gates());
  const auto k = count_gates(build_approximate(3, 1));
  EXPECT_EQ(k.hadamards, 3);
  EXPECT_EQ(k.controlled_phases, 2);
  EXPECT_THROW(build_approximate(3, 0), SizeError);
  EXPECT_THROW(build_approximate(3, 4), SizeError);
}

TEST(BuildApproximate, ErrorShrinksWithDistance) {
  const int n = 6;
  const auto f = oracle::dft(n);
  const auto p = oracle::bit_reversal(n);
  double previous = 1e9;
  for (int m = 1; m < n; ++m) {
    const double dev = oracle::phase_distance(p * circuit_unitary(build_approximate(n, m)).entries(), f);
    EXPECT_LE(dev, previous + 1e-12) << m;
    previous = dev;
  }
  EXPECT_LT(previous, 1e-10);
}

TEST(GateUnitary, Examples) {
  const auto b = gate_unitary(ControlledPhase{1, 2, std::numbers::pi / 2}, 2);
  Matrix expected = Matrix::Identity(4, 4);
  expected(3, 3) = Complex(0, 1);
  EXPECT_LT(max_abs_difference(b.entries(), expected), 1e-15);

  const auto cnot = gate_unitary(RootCnot{1, 2, 1.0}, 2);
  Matrix perm = Matrix::Zero(4, 4);
  perm(0, 0) = perm(1, 1) = perm(2, 3) = perm(3, 2) = 1.0;
  EXPECT_LT(max_abs_difference(cnot.entries(), perm), 1e-15);
}

TEST(GateUnitary, MatchesKroneckerOracle) {
  const int n = 4;
  std::vector<Gate> gates{Hadamard{3}, TotalHadamard{}, ControlledPhase{1, 4, 0.3}, ControlledPhase{2, 3, -1.1},
                          RootCnot{1, 3, 0.25}, RootCnot{2, 4, 0.7}, Swap{1, 4}, Swap{2, 3}};
  for (const auto& g : gates) {
    EXPECT_LT(max_abs_difference(gate_unitary(g, n).entries(), oracle_gate(g, n)), 1e-13) << to_json(g).dump();
  }
}

TEST(GateUnitary, InvalidLabels) {
  EXPECT_THROW(gate_unitary(Hadamard{3}, 2), LabelError);
  EXPECT_THROW(gate_unitary(ControlledPhase{2, 1, 0.1}, 2), LabelError);
  EXPECT_THROW(gate_unitary(RootCnot{1, 2, 0.0}, 2), LabelError);
  EXPECT_THROW(gate_unitary(RootCnot{1, 2, 1.5}, 2), LabelError);
  EXPECT_THROW(gate_unitary(Swap{2, 2}, 2), LabelError);
  EXPECT_THROW(Circuit(2, {Hadamard{0}}), LabelError);
}

TEST(CircuitUnitary, EmptyIsIdentity) {
  const auto u = circuit_unitary(Circuit(3, {}));
  EXPECT_LT(max_abs_difference(u.entries(), Matrix::Identity(8, 8)), 1e-15);
}

TEST(CircuitUnitary, SerialTimesReversalIsDft) {
  for (int n = 1; n <= 7; ++n) {
    const CMatrix serial = circuit_unitary(build_serial(n)).entries();
    EXPECT_LT(max_abs_difference(serial, oracle_circuit(build_serial(n))), 1e-12);
    EXPECT_LT(oracle::phase_distance(oracle::bit_reversal(n) * serial, oracle::dft(n)), 1e-10) << n;
  }
}

TEST(CircuitUnitary, ParallelEqualsSerial) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_LT(oracle::phase_distance(circuit_unitary(build_parallel(n)).entries(),
                                     circuit_unitary(build_serial(n)).entries()),
              1e-10)
        << n;
  }
}

TEST(CircuitUnitary, SwapsReplaceRelabeling) {
  for (int n = 1; n <= 6; ++n) {
    const auto with = append_reversal_swaps(build_serial(n));
    EXPECT_EQ(count_gates(with).swaps, n / 2);
    EXPECT_LT(oracle::phase_distance(circuit_unitary(with).entries(), oracle::dft(n)), 1e-10);
  }
}

TEST(RootCnotIdentity, ConjugatedPhaseIsRootOfCnot) {
  const int n = 4;
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      const CMatrix h = oracle::hadamard(k, n);
      const CMatrix lhs = h * gate_unitary(ControlledPhase{j, k, controlled_phase_angle(j, k)}, n).entries() * h;
      const CMatrix rhs = gate_unitary(RootCnot{j, k, root_cnot_exponent(j, k)}, n).entries();
      EXPECT_LT(oracle::phase_distance(lhs, rhs), 1e-12);
      EXPECT_DOUBLE_EQ(root_cnot_exponent(j, k), std::ldexp(1.0, j - k));
    }
  }
}

TEST(ProductState, Examples) {
  for (int n = 1; n <= 4; ++n) {
    const auto psi = qft_product_state(0, n);
    for (Index i = 0; i < psi.amplitudes().size(); ++i) {
      EXPECT_NEAR(std::abs(psi[i] - std::pow(2.0, -n / 2.0)), 0.0, 1e-15);
    }
  }
  const auto one = qft_product_state(1, 1);
  EXPECT_NEAR(one[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(one[1].real(), -1 / std::sqrt(2.0), 1e-15);

  const auto phases = product_state_phases(1, 2);
  ASSERT_EQ(phases.size(), 2u);
  EXPECT_DOUBLE_EQ(phases[0], 0.25);
  EXPECT_DOUBLE_EQ(phases[1], 0.5);
  EXPECT_THROW(qft_product_state(4, 2), SizeError);
}

TEST(ProductState, MatchesReversedDftColumns) {
  for (int n = 1; n <= 5; ++n) {
    const CMatrix pf = oracle::bit_reversal(n) * oracle::dft(n);
    for (std::uint64_t a = 0; a < (1u << n); ++a) {
      const auto psi = qft_product_state(a, n);
      EXPECT_LT((psi.amplitudes() - pf.col(static_cast<Index>(a))).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(CircuitJson, RoundTrip) {
  for (const auto& c : {build_serial(4), build_parallel(4), build_approximate(5, 2),
                        append_reversal_swaps(build_serial(3))}) {
    const auto back = circuit_from_json(to_json(c));
    EXPECT_EQ(back, c);
  }
  EXPECT_EQ(decomposition_from_string("parallel"), Decomposition::parallel);
  EXPECT_THROW(decomposition_from_string("diagonal"), UnknownNameError);
  EXPECT_THROW(gate_from_json({{"kind", "toffoli"}}), UnknownNameError);
}

}  // namespace
}  // namespace spinqft::qft
