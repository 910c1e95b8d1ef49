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

#include "spinqft/tomo.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <random>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "spinqft/error.hpp"
#include "spinqft/nmrsim.hpp"

namespace spinqft::tomo {

namespace {

void check_size(int n) {
  if (n < 1 || n > kMaxTomographyQubits) {
    throw SizeError("tomography supports 1 to " + std::to_string(kMaxTomographyQubits) + " qubits, got " +
                    std::to_string(n));
  }
}

Matrix readout_unitary(const ReadoutExperiment& e, int n) {
  if (e.pulses.size() != static_cast<std::size_t>(n)) {
    throw DimensionError("readout experiment has " + std::to_string(e.pulses.size()) + " pulses for " +
                         std::to_string(n) + " qubits");
  }
  const Index dim = hilbert_dimension(n);
  Matrix r = Matrix::Identity(dim, dim);
  const double quarter = std::numbers::pi / 2.0;
  for (int q = 1; q <= n; ++q) {
    switch (e.pulses[static_cast<std::size_t>(q - 1)]) {
      case ReadoutPulse::none:
        break;
      case ReadoutPulse::x90:
        apply_single_qubit(r, nmr::rotation(quarter, nmr::kPhaseX), q, n);
        break;
      case ReadoutPulse::y90:
        apply_single_qubit(r, nmr::rotation(quarter, nmr::kPhaseY), q, n);
        break;
    }
  }
  return r;
}

// Transposed observable matrices, so Tr(rho O) = sum(rho .* O^T).
const std::vector<Matrix>& observable_transposes(int n) {
  static const auto table = [] {
    std::vector<std::vector<Matrix>> all(kMaxTomographyQubits + 1);
    for (int m = 1; m <= kMaxTomographyQubits; ++m) {
      for (const auto& o : observables(m)) all[static_cast<std::size_t>(m)].push_back(observable_matrix(o, m).transpose());
    }
    return all;
  }();
  return table[static_cast<std::size_t>(n)];
}

std::vector<double> expectations(const Matrix& rho, const ReadoutExperiment& e, int n) {
  const Matrix r = readout_unitary(e, n);
  const Matrix rotated = r * rho * r.adjoint();
  const auto& obs = observable_transposes(n);
  std::vector<double> out;
  out.reserve(obs.size());
  for (const auto& ot : obs) out.push_back(rotated.cwiseProduct(ot).sum().real());
  return out;
}

// Pauli product with base-4 digits per qubit (qubit 1 most significant):
// 0 = I, 1 = X, 2 = Y, 3 = Z.
Matrix pauli_product(std::uint64_t code, int n) {
  const Index dim = hilbert_dimension(n);
  Matrix m = Matrix::Identity(dim, dim);
  Matrix2 x;
  x << 0, 1, 1, 0;
  Matrix2 y;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  Matrix2 z;
  z << 1, 0, 0, -1;
  for (int q = n; q >= 1; --q) {
    const int digit = static_cast<int>(code & 3u);
    code >>= 2;
    if (digit == 1) apply_single_qubit(m, x, q, n);
    if (digit == 2) apply_single_qubit(m, y, q, n);
    if (digit == 3) apply_single_qubit(m, z, q, n);
  }
  return m;
}

std::size_t experiment_index(const ReadoutExperiment& e) {
  std::size_t idx = 0;
  for (auto p : e.pulses) idx = idx * 3 + static_cast<std::size_t>(p);
  return idx;
}

struct Design {
  int n = 0;
  Index block_rows = 0;
  Eigen::MatrixXd matrix;  // all 3^n experiments, experiment-major
  std::unique_ptr<Eigen::ColPivHouseholderQR<Eigen::MatrixXd>> qr;
  std::vector<Matrix> paulis;
};

std::shared_ptr<const Design> cached_design(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Design>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  auto d = std::make_shared<Design>();
  d->n = n;
  const auto experiments = all_experiments(n);
  d->block_rows = static_cast<Index>(observables(n).size());
  const Index unknowns = hilbert_dimension(n) * hilbert_dimension(n) - 1;
  d->matrix.resize(d->block_rows * static_cast<Index>(experiments.size()), unknowns);
  for (Index p = 0; p < unknowns; ++p) d->paulis.push_back(pauli_product(static_cast<std::uint64_t>(p + 1), n));
  const auto& obs = observable_transposes(n);
  Index row = 0;
  for (const auto& e : experiments) {
    const Matrix r = readout_unitary(e, n);
    for (Index p = 0; p < unknowns; ++p) {
      const Matrix rotated = r * d->paulis[static_cast<std::size_t>(p)] * r.adjoint();
      for (Index k = 0; k < d->block_rows; ++k) {
        d->matrix(row + k, p) = rotated.cwiseProduct(obs[static_cast<std::size_t>(k)]).sum().real();
      }
    }
    row += d->block_rows;
  }
  d->qr = std::make_unique<Eigen::ColPivHouseholderQR<Eigen::MatrixXd>>(d->matrix);
  cache.emplace(n, d);
  return d;
}

}  // namespace

std::string to_string(ReadoutPulse p) {
  switch (p) {
    case ReadoutPulse::none:
      return "none";
    case ReadoutPulse::x90:
      return "90x";
    case ReadoutPulse::y90:
      return "90y";
  }
  return "?";
}

std::vector<ReadoutExperiment> all_experiments(int n) {
  check_size(n);
  std::size_t total = 1;
  for (int q = 0; q < n; ++q) total *= 3;
  std::vector<ReadoutExperiment> out;
  out.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    ReadoutExperiment e{std::vector<ReadoutPulse>(static_cast<std::size_t>(n))};
    std::size_t rest = i;
    for (int q = n - 1; q >= 0; --q) {
      e.pulses[static_cast<std::size_t>(q)] = static_cast<ReadoutPulse>(rest % 3);
      rest /= 3;
    }
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<Observable>& observables(int n) {
  check_size(n);
  static const auto table = [] {
    std::vector<std::vector<Observable>> all(kMaxTomographyQubits + 1);
    for (int m = 1; m <= kMaxTomographyQubits; ++m) {
      for (int spin = 1; spin <= m; ++spin) {
        const auto own = basis::qubit_mask(spin, m);
        for (char axis : {'x', 'y'}) {
          for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            if (mask & own) continue;
            all[static_cast<std::size_t>(m)].push_back({spin, axis, mask});
          }
        }
      }
    }
    return all;
  }();
  return table[static_cast<std::size_t>(n)];
}

Matrix observable_matrix(const Observable& o, int n) {
  std::uint64_t code = 0;
  for (int q = 1; q <= n; ++q) {
    int digit = 0;
    if (q == o.spin) digit = o.axis == 'x' ? 1 : 2;
    else if (o.z_mask & basis::qubit_mask(q, n)) digit = 3;
    code = code * 4 + static_cast<std::uint64_t>(digit);
  }
  return pauli_product(code, n);
}

std::vector<double> measure(const DensityMatrix& rho, const ReadoutExperiment& e,
                            const std::optional<Perturbation>& noise) {
  check_size(rho.qubits());
  auto values = expectations(rho.entries(), e, rho.qubits());
  if (noise && noise->sigma > 0.0) {
    std::mt19937_64 gen(noise->seed);
    std::normal_distribution<double> dist(0.0, noise->sigma);
    for (double& v : values) v += dist(gen);
  }
  return values;
}

ReadoutSet measure_all(const DensityMatrix& rho, const std::optional<Perturbation>& noise) {
  const int n = rho.qubits();
  ReadoutSet set{n, all_experiments(n), {}};
  std::optional<std::mt19937_64> gen;
  if (noise && noise->sigma > 0.0) gen.emplace(noise->seed);
  std::normal_distribution<double> dist(0.0, noise ? noise->sigma : 1.0);
  for (const auto& e : set.experiments) {
    auto values = expectations(rho.entries(), e, n);
    if (gen) {
      for (double& v : values) v += dist(*gen);
    }
    set.values.push_back(std::move(values));
  }
  return set;
}

DesignReport design(int n) {
  check_size(n);
  const auto d = cached_design(n);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(d->matrix);
  const auto& s = svd.singularValues();
  DesignReport r;
  r.n = n;
  r.rows = d->matrix.rows();
  r.unknowns = d->matrix.cols();
  r.rank = d->qr->rank();
  r.largest_singular_value = s(0);
  r.smallest_singular_value = s(s.size() - 1);
  return r;
}

DensityMatrix reconstruct(const ReadoutSet& readouts, double trace) {
  const int n = readouts.n;
  check_size(n);
  if (readouts.values.size() != readouts.experiments.size()) {
    throw DimensionError("readout set has " + std::to_string(readouts.values.size()) + " value rows for " +
                         std::to_string(readouts.experiments.size()) + " experiments");
  }
  const auto d = cached_design(n);
  const Index block = d->block_rows;
  const Index rows = block * static_cast<Index>(readouts.experiments.size());

  Eigen::VectorXd y(rows);
  Eigen::MatrixXd a(rows, d->matrix.cols());
  std::vector<bool> seen(static_cast<std::size_t>(d->matrix.rows() / block), false);
  for (std::size_t i = 0; i < readouts.experiments.size(); ++i) {
    const auto& e = readouts.experiments[i];
    if (e.pulses.size() != static_cast<std::size_t>(n)) {
      throw DimensionError("readout experiment does not match the register size");
    }
    if (readouts.values[i].size() != static_cast<std::size_t>(block)) {
      throw DimensionError("experiment " + std::to_string(i) + " has " + std::to_string(readouts.values[i].size()) +
                           " values, expected " + std::to_string(block));
    }
    const auto idx = experiment_index(e);
    seen[idx] = true;
    a.middleRows(static_cast<Index>(i) * block, block) = d->matrix.middleRows(static_cast<Index>(idx) * block, block);
    for (Index k = 0; k < block; ++k) y(static_cast<Index>(i) * block + k) = readouts.values[i][static_cast<std::size_t>(k)];
  }

  Eigen::VectorXd coeffs;
  const bool full = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }) &&
                    readouts.experiments.size() == seen.size();
  if (full) {
    coeffs = d->qr->solve(y);
  } else {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    if (qr.rank() < a.cols()) {
      throw IncompleteReadoutError("readout experiments determine only " + std::to_string(qr.rank()) + " of " +
                                   std::to_string(a.cols()) + " traceless components");
    }
    coeffs = qr.solve(y);
  }

  const Index dim = hilbert_dimension(n);
  Matrix rho = Matrix::Identity(dim, dim) * (trace / static_cast<double>(dim));
  for (Index p = 0; p < coeffs.size(); ++p) rho += coeffs(p) * d->paulis[static_cast<std::size_t>(p)];
  return DensityMatrix(n, std::move(rho), DensityMatrix::Kind::hermitian);
}

FidelityReport fidelity(const DensityMatrix& theory, const DensityMatrix& experiment, const DensityMatrix& initial) {
  if (theory.qubits() != experiment.qubits() || theory.qubits() != initial.qubits()) {
    throw DimensionError("fidelity arguments have different register sizes");
  }
  const double th2 = theory.entries().squaredNorm();
  const double ex2 = experiment.entries().squaredNorm();
  const double in2 = initial.entries().squaredNorm();
  if (th2 == 0.0) throw UndefinedFidelityError("theoretical density matrix has zero norm");
  if (ex2 == 0.0) throw UndefinedFidelityError("experimental density matrix has zero norm");
  if (in2 == 0.0) throw UndefinedFidelityError("initial density matrix has zero norm");

  // Tr(A B) for Hermitian A, B is the Frobenius inner product.
  const double overlap = (theory.entries().conjugate().cwiseProduct(experiment.entries())).sum().real();
  FidelityReport r;
  r.correlation = overlap / (std::sqrt(th2) * std::sqrt(ex2));
  r.signal_retention = ex2 / in2;
  r.fidelity = r.correlation * std::sqrt(r.signal_retention);
  return r;
}

nlohmann::json to_json(const FidelityReport& r) {
  return {{"correlation", r.correlation}, {"signal_retention", r.signal_retention}, {"fidelity", r.fidelity}};
}

DensityMatrix ideal_qft_output(const DensityMatrix& input, bool relabel) {
  const int n = input.qubits();
  UnitaryMatrix u = dft_oracle(n);
  if (relabel) u = bit_reversal_permutation(n) * u;
  return conjugate(u, input);
}

void write_bar_chart_csv(std::ostream& out, const std::vector<std::pair<std::string, DensityMatrix>>& panels) {
  auto num = [](double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v == 0.0 ? 0.0 : v);
    return std::string(buf, ptr);
  };
  out << "panel,row,col,re,im\n";
  for (const auto& [name, rho] : panels) {
    const int n = rho.qubits();
    for (Index r = 0; r < rho.dimension(); ++r) {
      for (Index c = 0; c < rho.dimension(); ++c) {
        const Complex v = rho(r, c);
        out << name << ',' << basis::ket_label(static_cast<std::uint64_t>(r), n) << ','
            << basis::ket_label(static_cast<std::uint64_t>(c), n) << ',' << num(v.real()) << ',' << num(v.imag())
            << '\n';
      }
    }
  }
}

}  // namespace spinqft::tomo
