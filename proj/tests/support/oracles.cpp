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

#include "oracles.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include <unsupported/Eigen/FFT>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace spinqft::oracle {

namespace {

using C = std::complex<double>;

CMatrix kron_chain(const std::vector<Eigen::Matrix2cd>& factors) {
  CMatrix acc = CMatrix::Identity(1, 1);
  for (const auto& f : factors) {
    CMatrix next = Eigen::kroneckerProduct(acc, CMatrix(f)).eval();
    acc = std::move(next);
  }
  return acc;
}

Eigen::Matrix2cd projector(int bit) {
  Eigen::Matrix2cd p = Eigen::Matrix2cd::Zero();
  p(bit, bit) = 1.0;
  return p;
}

}  // namespace

CMatrix dft(int n) {
  const int dim = 1 << n;
  Eigen::FFT<double> fft;
  CMatrix f(dim, dim);
  for (int a = 0; a < dim; ++a) {
    std::vector<C> e(static_cast<std::size_t>(dim), C(0.0));
    e[static_cast<std::size_t>(a)] = 1.0;
    std::vector<C> out;
    fft.inv(out, e);  // (1/N) sum_k x_k exp(+2 pi i k c / N)
    for (int c = 0; c < dim; ++c) f(c, a) = out[static_cast<std::size_t>(c)] * std::sqrt(static_cast<double>(dim));
  }
  return f;
}

CMatrix bit_reversal(int n) {
  const int dim = 1 << n;
  CMatrix p = CMatrix::Zero(dim, dim);
  for (int x = 0; x < dim; ++x) {
    int y = 0;
    for (int b = 0; b < n; ++b) {
      if (x & (1 << b)) y |= 1 << (n - 1 - b);
    }
    p(y, x) = 1.0;
  }
  return p;
}

CMatrix embed(const Eigen::Matrix2cd& op, int q, int n) {
  std::vector<Eigen::Matrix2cd> f(static_cast<std::size_t>(n), Eigen::Matrix2cd::Identity());
  f[static_cast<std::size_t>(q - 1)] = op;
  return kron_chain(f);
}

CMatrix controlled(const Eigen::Matrix2cd& op, int c, int t, int n) {
  std::vector<Eigen::Matrix2cd> off(static_cast<std::size_t>(n), Eigen::Matrix2cd::Identity());
  off[static_cast<std::size_t>(c - 1)] = projector(0);
  std::vector<Eigen::Matrix2cd> on(static_cast<std::size_t>(n), Eigen::Matrix2cd::Identity());
  on[static_cast<std::size_t>(c - 1)] = projector(1);
  on[static_cast<std::size_t>(t - 1)] = op;
  return kron_chain(off) + kron_chain(on);
}

CMatrix hadamard(int q, int n) {
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  return embed(h / std::sqrt(2.0), q, n);
}

CMatrix controlled_phase(int j, int k, double theta, int n) {
  Eigen::Matrix2cd ph = Eigen::Matrix2cd::Identity();
  ph(1, 1) = std::exp(C(0.0, theta));
  return controlled(ph, j, k, n);
}

CMatrix root_cnot(int j, int k, double alpha, int n) {
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  const Eigen::Matrix2cd xa = x.pow(alpha);
  return controlled(xa, j, k, n);
}

CMatrix ix(int q, int n) {
  Eigen::Matrix2cd s;
  s << 0, 0.5, 0.5, 0;
  return embed(s, q, n);
}

CMatrix iy(int q, int n) {
  Eigen::Matrix2cd s;
  s << 0, C(0, -0.5), C(0, 0.5), 0;
  return embed(s, q, n);
}

CMatrix iz(int q, int n) {
  Eigen::Matrix2cd s;
  s << 0.5, 0, 0, -0.5;
  return embed(s, q, n);
}

CMatrix expm_i(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const Eigen::VectorXcd phases = (es.eigenvalues().cast<C>() * C(0.0, -1.0)).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double phase_distance(const CMatrix& a, const CMatrix& b) {
  const C inner = (b.adjoint() * a).trace();
  const C lambda = std::abs(inner) > 0 ? inner / std::abs(inner) : C(1.0);
  return (a - lambda * b).cwiseAbs().maxCoeff();
}

CMatrix random_hermitian(int n, std::mt19937_64& gen) {
  const int dim = 1 << n;
  std::normal_distribution<double> d(0.0, 1.0);
  CMatrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      const double re = d(gen);
      const double im = d(gen);
      g(r, c) = C(re, im);
    }
  }
  return (g + g.adjoint()) / 2.0;
}

CMatrix random_traceless_hermitian(int n, std::mt19937_64& gen) {
  CMatrix h = random_hermitian(n, gen);
  const int dim = 1 << n;
  h -= CMatrix::Identity(dim, dim) * (h.trace() / static_cast<double>(dim));
  return h;
}

CMatrix random_unitary(int n, std::mt19937_64& gen) {
  const int dim = 1 << n;
  std::normal_distribution<double> d(0.0, 1.0);
  CMatrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      const double re = d(gen);
      const double im = d(gen);
      g(r, c) = C(re, im);
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < dim; ++c) {
    const C diag = r(c, c);
    q.col(c) *= diag / std::abs(diag);
  }
  return q;
}

long double coupling_double_sum(int n) {
  long double s = 0.0L;
  for (int j = 0; j <= n - 1; ++j) {
    for (int k = j + 1; k <= n; ++k) s += std::ldexp(1.0L, j - k);
  }
  return s;
}

Fidelity fidelity(const CMatrix& th, const CMatrix& ex, const CMatrix& in) {
  const double tt = (th * th).trace().real();
  const double ee = (ex * ex).trace().real();
  const double ii = (in * in).trace().real();
  const double te = (th * ex).trace().real();
  Fidelity f{};
  f.correlation = te / (std::sqrt(tt) * std::sqrt(ee));
  f.retention = ee / ii;
  f.fidelity = f.correlation * std::sqrt(f.retention);
  return f;
}

std::pair<double, double> proportionality(const CMatrix& a, const CMatrix& b) {
  const double c = (b.adjoint() * a).trace().real() / b.squaredNorm();
  return {c, (a - c * b).cwiseAbs().maxCoeff()};
}

}  // namespace spinqft::oracle
