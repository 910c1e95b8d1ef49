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

// Dense linear algebra over the 2^n-dimensional space of n qubits.
//
// Basis convention: qubit 1 is the most significant bit of the basis index,
// so |q1 q2 ... qn> has index q1*2^(n-1) + ... + qn. Transition labels used
// by pulse sequences are 1-based basis indices (label t is index t-1).

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

#include <Eigen/Dense>

namespace spinqft {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;
using Index = Eigen::Index;

inline constexpr int kMaxQubits = 12;

namespace tolerance {
/// Unitarity and equivalence of analytically exact constructions.
inline constexpr double kExact = 1e-10;
/// Norms, traces and Hermiticity.
inline constexpr double kNorm = 1e-12;
/// Anything that passes through the pulse simulator.
inline constexpr double kSimulated = 1e-6;
/// Lowest eigenvalue accepted for a physical density matrix.
inline constexpr double kEigenvalue = 1e-10;
}  // namespace tolerance

/// 2^n; throws SizeError unless 1 <= n <= kMaxQubits.
Index hilbert_dimension(int n);

/// Inverse of hilbert_dimension; throws SizeError if dim is not 2^n.
int qubit_count(Index dim);

namespace basis {

inline constexpr std::uint64_t qubit_mask(int qubit, int n) {
  return std::uint64_t{1} << (n - qubit);
}

inline constexpr int bit(std::uint64_t index, int qubit, int n) {
  return static_cast<int>((index >> (n - qubit)) & 1U);
}

/// Basis index for a 1-based transition label; throws LabelError.
std::uint64_t index_from_label(int label, int n);

/// Index with the order of its n bits reversed.
std::uint64_t reverse_bits(std::uint64_t index, int n);

/// "010"-style ket label, qubit 1 first.
std::string ket_label(std::uint64_t index, int n);

}  // namespace basis

class StateVector {
 public:
  StateVector(int n, Vector amplitudes);

  static StateVector basis_state(int n, std::uint64_t index);

  int qubits() const noexcept { return n_; }
  const Vector& amplitudes() const noexcept { return amps_; }
  Complex operator[](Index i) const { return amps_(i); }

  double norm_squared() const { return amps_.squaredNorm(); }
  bool is_normalized(double tol = tolerance::kNorm) const;

 private:
  int n_;
  Vector amps_;
};

class DensityMatrix {
 public:
  /// physical: trace 1, positive semidefinite. deviation: traceless.
  /// hermitian: no constraint beyond Hermiticity (sums, scaled matrices).
  enum class Kind { physical, deviation, hermitian };

  /// Validates the invariants of `kind`; the stored matrix is symmetrized.
  DensityMatrix(int n, Matrix entries, Kind kind = Kind::hermitian);

  static DensityMatrix from_state(const StateVector& psi);
  static DensityMatrix zero(int n);
  /// |index><index| - I/2^n.
  static DensityMatrix pseudopure_deviation(int n, std::uint64_t index = 0);

  int qubits() const noexcept { return n_; }
  Index dimension() const noexcept { return entries_.rows(); }
  const Matrix& entries() const noexcept { return entries_; }
  Kind kind() const noexcept { return kind_; }
  Complex operator()(Index r, Index c) const { return entries_(r, c); }

  double trace() const { return entries_.trace().real(); }
  /// Tr(rho^2).
  double purity() const;
  /// Traceless part, rho - Tr(rho)/2^n * I.
  DensityMatrix deviation() const;
  /// Same matrix re-tagged, checking the new kind's invariants.
  DensityMatrix as(Kind kind) const { return DensityMatrix(n_, entries_, kind); }

 private:
  int n_;
  Matrix entries_;
  Kind kind_;
};

class UnitaryMatrix {
 public:
  /// Throws InvariantError unless U U^dagger = I within tolerance::kExact.
  UnitaryMatrix(int n, Matrix entries);

  /// For matrices built from exactly unitary factors, where an O(8^n) check
  /// would dominate the cost. The caller vouches for unitarity.
  static UnitaryMatrix unchecked(int n, Matrix entries);
  static UnitaryMatrix identity(int n);

  int qubits() const noexcept { return n_; }
  Index dimension() const noexcept { return entries_.rows(); }
  const Matrix& entries() const noexcept { return entries_; }
  Complex operator()(Index r, Index c) const { return entries_(r, c); }

  UnitaryMatrix adjoint() const;

  /// Composition; (a * b) applies b first.
  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);

 private:
  struct NoCheck {};
  UnitaryMatrix(int n, Matrix entries, NoCheck);

  int n_;
  Matrix entries_;
};

/// Entry (c, a) = exp(2 pi i a c / 2^n) / sqrt(2^n), by direct double loop.
UnitaryMatrix dft_oracle(int n);

StateVector apply(const UnitaryMatrix& u, const StateVector& v);
/// U rho U^dagger; keeps the kind of rho.
DensityMatrix conjugate(const UnitaryMatrix& u, const DensityMatrix& rho);

struct PhaseComparison {
  bool equal = false;
  /// gamma with a ~= exp(i gamma) b, from the largest-magnitude entry of b.
  double phase = 0.0;
  double max_deviation = 0.0;
};

/// Never throws: mismatched shapes or a zero `b` compare unequal.
PhaseComparison equal_up_to_global_phase(const Matrix& a, const Matrix& b, double tol);
PhaseComparison equal_up_to_global_phase(const UnitaryMatrix& a, const UnitaryMatrix& b,
                                         double tol);

double max_abs_difference(const Matrix& a, const Matrix& b);

/// Kronecker product; the first factor holds the most significant qubits.
UnitaryMatrix tensor(std::span<const UnitaryMatrix> factors);
UnitaryMatrix tensor(std::initializer_list<UnitaryMatrix> factors);
StateVector tensor(std::span<const StateVector> factors);
StateVector tensor(std::initializer_list<StateVector> factors);

/// P|b_1 ... b_n> = |b_n ... b_1>.
UnitaryMatrix bit_reversal_permutation(int n);

// In-place left multiplication of `m` (2^n rows) by embedded operators.
// These are the building blocks for gates and pulses; each touches O(rows *
// cols) entries instead of forming a 2^n x 2^n factor.

/// op acts on `qubit` (1-based).
void apply_single_qubit(Matrix& m, const Matrix2& op, int qubit, int n);
/// op acts on `target` in the subspace where every qubit in `controls` is 1.
void apply_controlled(Matrix& m, const Matrix2& op, std::span<const int> controls, int target,
                      int n);
/// op acts on span{|i>, |j>}; identity elsewhere.
void apply_two_level(Matrix& m, const Matrix2& op, Index i, Index j);
/// Row r multiplied by phases(r).
void apply_diagonal(Matrix& m, const Vector& phases);

/// The single-qubit Hadamard.
Matrix2 hadamard_matrix();

}  // namespace spinqft
