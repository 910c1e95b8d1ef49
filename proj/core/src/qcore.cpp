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

#include "spinqft/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "spinqft/error.hpp"

namespace spinqft {

namespace {

void check_qubits(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw SizeError("qubit count " + std::to_string(n) + " outside [1, " +
                    std::to_string(kMaxQubits) + "]");
  }
}

void check_square(const Matrix& m, int n, const char* what) {
  const Index dim = hilbert_dimension(n);
  if (m.rows() != dim || m.cols() != dim) {
    throw DimensionError(std::string(what) + ": expected " + std::to_string(dim) + "x" +
                         std::to_string(dim) + ", got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

Index hilbert_dimension(int n) {
  check_qubits(n);
  return Index{1} << n;
}

int qubit_count(Index dim) {
  for (int n = 1; n <= kMaxQubits; ++n) {
    if ((Index{1} << n) == dim) return n;
  }
  throw SizeError("dimension " + std::to_string(dim) + " is not 2^n for 1 <= n <= 12");
}

namespace basis {

std::uint64_t index_from_label(int label, int n) {
  const auto dim = static_cast<std::int64_t>(hilbert_dimension(n));
  if (label < 1 || label > dim) {
    throw LabelError("transition label " + std::to_string(label) + " outside [1, " +
                     std::to_string(dim) + "]");
  }
  return static_cast<std::uint64_t>(label - 1);
}

std::uint64_t reverse_bits(std::uint64_t index, int n) {
  std::uint64_t out = 0;
  for (int b = 0; b < n; ++b) {
    out = (out << 1) | ((index >> b) & 1U);
  }
  return out;
}

std::string ket_label(std::uint64_t index, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int q = 1; q <= n; ++q) {
    if (bit(index, q, n)) s[static_cast<std::size_t>(q - 1)] = '1';
  }
  return s;
}

}  // namespace basis

// ---------------------------------------------------------------- StateVector

StateVector::StateVector(int n, Vector amplitudes) : n_(n), amps_(std::move(amplitudes)) {
  if (amps_.size() != hilbert_dimension(n)) {
    throw DimensionError("state vector of length " + std::to_string(amps_.size()) +
                         " for " + std::to_string(n) + " qubits");
  }
}

StateVector StateVector::basis_state(int n, std::uint64_t index) {
  const Index dim = hilbert_dimension(n);
  if (index >= static_cast<std::uint64_t>(dim)) {
    throw SizeError("basis index " + std::to_string(index) + " out of range");
  }
  Vector v = Vector::Zero(dim);
  v(static_cast<Index>(index)) = 1.0;
  return StateVector(n, std::move(v));
}

bool StateVector::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

// -------------------------------------------------------------- DensityMatrix

DensityMatrix::DensityMatrix(int n, Matrix entries, Kind kind)
    : n_(n), entries_(std::move(entries)), kind_(kind) {
  check_square(entries_, n, "density matrix");
  const double scale = std::max(1.0, max_abs(entries_));
  const double asym = max_abs(entries_ - entries_.adjoint());
  if (asym > tolerance::kNorm * scale) {
    throw InvariantError("density matrix not Hermitian (deviation " + std::to_string(asym) +
                         ")");
  }
  entries_ = 0.5 * (entries_ + entries_.adjoint()).eval();

  switch (kind_) {
    case Kind::physical: {
      if (std::abs(trace() - 1.0) > tolerance::kNorm) {
        throw InvariantError("physical density matrix with trace " + std::to_string(trace()));
      }
      Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_, Eigen::EigenvaluesOnly);
      if (solver.eigenvalues().minCoeff() < -tolerance::kEigenvalue) {
        throw InvariantError("physical density matrix with negative eigenvalue " +
                             std::to_string(solver.eigenvalues().minCoeff()));
      }
      break;
    }
    case Kind::deviation:
      if (std::abs(entries_.trace()) > tolerance::kNorm * scale) {
        throw InvariantError("deviation density matrix with nonzero trace " +
                             std::to_string(trace()));
      }
      break;
    case Kind::hermitian:
      break;
  }
}

DensityMatrix DensityMatrix::from_state(const StateVector& psi) {
  if (!psi.is_normalized()) {
    throw InvariantError("density matrix from an unnormalized state");
  }
  const Vector& a = psi.amplitudes();
  return DensityMatrix(psi.qubits(), a * a.adjoint(), Kind::physical);
}

DensityMatrix DensityMatrix::zero(int n) {
  const Index dim = hilbert_dimension(n);
  return DensityMatrix(n, Matrix::Zero(dim, dim), Kind::deviation);
}

DensityMatrix DensityMatrix::pseudopure_deviation(int n, std::uint64_t index) {
  const Index dim = hilbert_dimension(n);
  if (index >= static_cast<std::uint64_t>(dim)) {
    throw SizeError("basis index " + std::to_string(index) + " out of range");
  }
  Matrix m = Matrix::Identity(dim, dim) * Complex(-1.0 / static_cast<double>(dim));
  m(static_cast<Index>(index), static_cast<Index>(index)) += 1.0;
  return DensityMatrix(n, std::move(m), Kind::deviation);
}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return entries_.squaredNorm();
}

DensityMatrix DensityMatrix::deviation() const {
  const Index dim = dimension();
  Matrix m = entries_;
  m.diagonal().array() -= entries_.trace() / static_cast<double>(dim);
  return DensityMatrix(n_, std::move(m), Kind::deviation);
}

// -------------------------------------------------------------- UnitaryMatrix

UnitaryMatrix::UnitaryMatrix(int n, Matrix entries, NoCheck) : n_(n), entries_(std::move(entries)) {
  check_square(entries_, n, "unitary");
}

UnitaryMatrix::UnitaryMatrix(int n, Matrix entries) : UnitaryMatrix(n, std::move(entries), NoCheck{}) {
  const Index dim = dimension();
  const double dev = max_abs(entries_ * entries_.adjoint() - Matrix::Identity(dim, dim));
  if (dev > tolerance::kExact) {
    throw InvariantError("matrix is not unitary (max |UU^+ - I| = " + std::to_string(dev) + ")");
  }
}

UnitaryMatrix UnitaryMatrix::unchecked(int n, Matrix entries) {
  return UnitaryMatrix(n, std::move(entries), NoCheck{});
}

UnitaryMatrix UnitaryMatrix::identity(int n) {
  const Index dim = hilbert_dimension(n);
  return UnitaryMatrix(n, Matrix::Identity(dim, dim), NoCheck{});
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  return UnitaryMatrix(n_, entries_.adjoint(), NoCheck{});
}

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.n_ != b.n_) {
    throw DimensionError("composing unitaries on " + std::to_string(a.n_) + " and " +
                         std::to_string(b.n_) + " qubits");
  }
  return UnitaryMatrix(a.n_, a.entries_ * b.entries_, UnitaryMatrix::NoCheck{});
}

// ----------------------------------------------------------------- operations

UnitaryMatrix dft_oracle(int n) {
  const Index q = hilbert_dimension(n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(q));
  Matrix f(q, q);
  for (Index c = 0; c < q; ++c) {
    for (Index a = 0; a < q; ++a) {
      // a*c mod q keeps the angle in [0, 2 pi) so large products lose no bits.
      const auto k = static_cast<double>((a * c) % q);
      const double angle = 2.0 * std::numbers::pi * k / static_cast<double>(q);
      f(c, a) = std::polar(norm, angle);
    }
  }
  return UnitaryMatrix::unchecked(n, std::move(f));
}

StateVector apply(const UnitaryMatrix& u, const StateVector& v) {
  if (u.qubits() != v.qubits()) {
    throw DimensionError("applying a " + std::to_string(u.qubits()) + "-qubit unitary to a " +
                         std::to_string(v.qubits()) + "-qubit state");
  }
  return StateVector(v.qubits(), u.entries() * v.amplitudes());
}

DensityMatrix conjugate(const UnitaryMatrix& u, const DensityMatrix& rho) {
  if (u.qubits() != rho.qubits()) {
    throw DimensionError("conjugating a " + std::to_string(rho.qubits()) +
                         "-qubit density matrix by a " + std::to_string(u.qubits()) +
                         "-qubit unitary");
  }
  Matrix out = u.entries() * rho.entries() * u.entries().adjoint();
  return DensityMatrix(rho.qubits(), std::move(out), rho.kind());
}

double max_abs_difference(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("comparing matrices of different shapes");
  }
  return max_abs(a - b);
}

PhaseComparison equal_up_to_global_phase(const Matrix& a, const Matrix& b, double tol) {
  PhaseComparison out;
  if (a.rows() != b.rows() || a.cols() != b.cols() || b.size() == 0) {
    out.max_deviation = std::numeric_limits<double>::infinity();
    return out;
  }
  Index r = 0;
  Index c = 0;
  const double peak = b.cwiseAbs().maxCoeff(&r, &c);
  if (peak == 0.0 || a(r, c) == Complex(0.0)) {
    out.max_deviation = max_abs(a - b);
    out.equal = out.max_deviation <= tol;
    return out;
  }
  out.phase = std::arg(a(r, c) / b(r, c));
  out.max_deviation = max_abs(a - std::polar(1.0, out.phase) * b);
  out.equal = out.max_deviation <= tol;
  return out;
}

PhaseComparison equal_up_to_global_phase(const UnitaryMatrix& a, const UnitaryMatrix& b,
                                         double tol) {
  return equal_up_to_global_phase(a.entries(), b.entries(), tol);
}

UnitaryMatrix tensor(std::span<const UnitaryMatrix> factors) {
  if (factors.empty()) throw DimensionError("tensor product of no factors");
  int n = 0;
  for (const auto& f : factors) n += f.qubits();
  check_qubits(n);
  Matrix acc = factors.front().entries();
  for (const auto& f : factors.subspan(1)) {
    Matrix next(acc.rows() * f.dimension(), acc.cols() * f.dimension());
    for (Index i = 0; i < acc.rows(); ++i) {
      for (Index j = 0; j < acc.cols(); ++j) {
        next.block(i * f.dimension(), j * f.dimension(), f.dimension(), f.dimension()) =
            acc(i, j) * f.entries();
      }
    }
    acc = std::move(next);
  }
  return UnitaryMatrix::unchecked(n, std::move(acc));
}

UnitaryMatrix tensor(std::initializer_list<UnitaryMatrix> factors) {
  return tensor(std::span<const UnitaryMatrix>(factors.begin(), factors.size()));
}

StateVector tensor(std::span<const StateVector> factors) {
  if (factors.empty()) throw DimensionError("tensor product of no factors");
  int n = 0;
  for (const auto& f : factors) n += f.qubits();
  check_qubits(n);
  Vector acc = factors.front().amplitudes();
  for (const auto& f : factors.subspan(1)) {
    const Vector& b = f.amplitudes();
    Vector next(acc.size() * b.size());
    for (Index i = 0; i < acc.size(); ++i) next.segment(i * b.size(), b.size()) = acc(i) * b;
    acc = std::move(next);
  }
  return StateVector(n, std::move(acc));
}

StateVector tensor(std::initializer_list<StateVector> factors) {
  return tensor(std::span<const StateVector>(factors.begin(), factors.size()));
}

UnitaryMatrix bit_reversal_permutation(int n) {
  const Index dim = hilbert_dimension(n);
  Matrix p = Matrix::Zero(dim, dim);
  for (Index a = 0; a < dim; ++a) {
    p(static_cast<Index>(basis::reverse_bits(static_cast<std::uint64_t>(a), n)), a) = 1.0;
  }
  return UnitaryMatrix::unchecked(n, std::move(p));
}

// ------------------------------------------------------ in-place embeddings

void apply_single_qubit(Matrix& m, const Matrix2& op, int qubit, int n) {
  if (qubit < 1 || qubit > n) throw LabelError("qubit " + std::to_string(qubit) + " out of range");
  const auto mask = static_cast<Index>(basis::qubit_mask(qubit, n));
  for (Index i = 0; i < m.rows(); ++i) {
    if (i & mask) continue;
    apply_two_level(m, op, i, i | mask);
  }
}

void apply_controlled(Matrix& m, const Matrix2& op, std::span<const int> controls, int target,
                      int n) {
  if (target < 1 || target > n) throw LabelError("qubit " + std::to_string(target) + " out of range");
  Index control_mask = 0;
  for (int c : controls) {
    if (c < 1 || c > n || c == target) {
      throw LabelError("control qubit " + std::to_string(c) + " invalid");
    }
    control_mask |= static_cast<Index>(basis::qubit_mask(c, n));
  }
  const auto tmask = static_cast<Index>(basis::qubit_mask(target, n));
  for (Index i = 0; i < m.rows(); ++i) {
    if ((i & tmask) || (i & control_mask) != control_mask) continue;
    apply_two_level(m, op, i, i | tmask);
  }
}

void apply_two_level(Matrix& m, const Matrix2& op, Index i, Index j) {
  if (i == j || i < 0 || j < 0 || i >= m.rows() || j >= m.rows()) {
    throw LabelError("invalid two-level subspace {" + std::to_string(i) + ", " +
                     std::to_string(j) + "}");
  }
  for (Index c = 0; c < m.cols(); ++c) {
    const Complex a = m(i, c);
    const Complex b = m(j, c);
    m(i, c) = op(0, 0) * a + op(0, 1) * b;
    m(j, c) = op(1, 0) * a + op(1, 1) * b;
  }
}

void apply_diagonal(Matrix& m, const Vector& phases) {
  if (phases.size() != m.rows()) throw DimensionError("diagonal length mismatch");
  for (Index r = 0; r < m.rows(); ++r) m.row(r) *= phases(r);
}

Matrix2 hadamard_matrix() {
  const double s = 1.0 / std::numbers::sqrt2;
  Matrix2 h;
  h << s, s, s, -s;
  return h;
}

}  // namespace spinqft
