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

#include "spinqft/nmrsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "spinqft/error.hpp"

namespace spinqft::nmr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

SpinSystem::Pair ordered(int j, int k) { return j < k ? SpinSystem::Pair{j, k} : SpinSystem::Pair{k, j}; }

void check_spin(int s, int n) {
  if (s < 1 || s > n) {
    throw LabelError("spin " + std::to_string(s) + " outside [1, " + std::to_string(n) + "]");
  }
}

void check_spin_list(const std::vector<int>& spins, int n) {
  if (spins.empty()) throw LabelError("pulse addresses no spins");
  std::set<int> seen;
  for (int s : spins) {
    check_spin(s, n);
    if (!seen.insert(s).second) throw LabelError("spin " + std::to_string(s) + " listed twice");
  }
}

void check_transition(const TransitionPulse& t, int n) {
  const auto a = basis::index_from_label(t.from, n);
  const auto b = basis::index_from_label(t.to, n);
  const auto diff = a ^ b;
  if (diff == 0 || (diff & (diff - 1)) != 0) {
    throw LabelError("transition " + std::to_string(t.from) + "->" + std::to_string(t.to) +
                     " is not a single-quantum transition");
  }
}

void check_delay(const CouplingDelay& d, int n) {
  for (const auto& t : d.terms) {
    check_spin(t.j, n);
    check_spin(t.k, n);
    if (t.j == t.k) throw LabelError("coupling of a spin with itself");
    if (t.symbolic ? !(t.value > 0.0) : !(t.value >= 0.0)) {
      throw LabelError("delay term with non-positive value");
    }
  }
}

void check_element(const PulseElement& e, int n) {
  std::visit(overloaded{
                 [&](const SpinPulse& p) { check_spin_list(p.spins, n); },
                 [&](const TransitionPulse& t) { check_transition(t, n); },
                 [&](const CouplingDelay& d) { check_delay(d, n); },
                 [&](const CompositeZ& z) { check_spin_list(z.spins, n); },
             },
             e);
}

double term_duration(const DelayTerm& t, const SpinSystem& sys) {
  if (!t.symbolic) return t.value;
  return 1.0 / (t.value * sys.coupling(t.j, t.k));
}

// Eigenvalue of I_z for the spin's bit: +1/2 for |0>, -1/2 for |1>.
double iz(std::uint64_t index, int spin, int n) { return basis::bit(index, spin, n) ? -0.5 : 0.5; }

void apply_element(Matrix& m, const PulseElement& e, const SpinSystem& sys, const Convention& conv) {
  const int n = sys.spins();
  std::visit(overloaded{
                 [&](const SpinPulse& p) {
                   const Matrix2 r = rotation(p.angle, p.phase, conv.pulse_sense);
                   for (int s : p.spins) apply_single_qubit(m, r, s, n);
                 },
                 [&](const TransitionPulse& t) {
                   apply_two_level(m, rotation(t.angle, t.phase, conv.pulse_sense),
                                   static_cast<Index>(basis::index_from_label(t.from, n)),
                                   static_cast<Index>(basis::index_from_label(t.to, n)));
                 },
                 [&](const CouplingDelay& d) {
                   const Index dim = m.rows();
                   Vector phases(dim);
                   double longest = 0.0;
                   for (const auto& t : d.terms) longest = std::max(longest, term_duration(t, sys));
                   for (Index a = 0; a < dim; ++a) {
                     const auto idx = static_cast<std::uint64_t>(a);
                     double angle = 0.0;
                     for (const auto& t : d.terms) {
                       const double j_hz = t.symbolic || sys.has_coupling(t.j, t.k) ? sys.coupling(t.j, t.k) : 0.0;
                       angle += conv.coupling_sign * 2.0 * std::numbers::pi * j_hz * term_duration(t, sys) *
                                iz(idx, t.j, n) * iz(idx, t.k, n);
                     }
                     for (int s = 1; s <= n; ++s) {
                       const double nu = sys.offsets()[static_cast<std::size_t>(s - 1)];
                       if (nu != 0.0) angle += 2.0 * std::numbers::pi * nu * longest * iz(idx, s, n);
                     }
                     phases(a) = std::polar(1.0, -angle);
                   }
                   apply_diagonal(m, phases);
                 },
                 [&](const CompositeZ& z) {
                   for (const auto& p : expand_composite_z(z, conv.composite_z)) {
                     const Matrix2 r = rotation(p.angle, p.phase, conv.pulse_sense);
                     for (int s : p.spins) apply_single_qubit(m, r, s, n);
                   }
                 },
             },
             e);
}

}  // namespace

double degrees(double deg) { return deg * std::numbers::pi / 180.0; }

// ----------------------------------------------------------------- SpinSystem

SpinSystem::SpinSystem(int n, std::map<Pair, double> couplings, std::vector<double> offsets)
    : n_(n), offsets_(std::move(offsets)) {
  if (n < 1 || n > kMaxQubits) throw SizeError("spin count " + std::to_string(n) + " outside [1, 12]");
  for (const auto& [pair, hz] : couplings) {
    check_spin(pair.first, n);
    check_spin(pair.second, n);
    if (pair.first == pair.second) throw LabelError("coupling of a spin with itself");
    if (!std::isfinite(hz)) throw LabelError("non-finite coupling");
    const auto key = ordered(pair.first, pair.second);
    if (auto it = couplings_.find(key); it != couplings_.end() && it->second != hz) {
      throw LabelError("asymmetric coupling J" + std::to_string(key.first) + std::to_string(key.second));
    }
    couplings_[key] = hz;
  }
  if (offsets_.empty()) offsets_.assign(static_cast<std::size_t>(n), 0.0);
  if (offsets_.size() != static_cast<std::size_t>(n)) {
    throw DimensionError("need one offset per spin");
  }
}

SpinSystem SpinSystem::chloroform() { return SpinSystem(2, {{{1, 2}, kChloroformJ}}); }

SpinSystem SpinSystem::uniform(int n, double coupling_hz) {
  std::map<Pair, double> c;
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) c[{j, k}] = coupling_hz;
  }
  return SpinSystem(n, std::move(c));
}

bool SpinSystem::has_coupling(int j, int k) const { return couplings_.contains(ordered(j, k)); }

double SpinSystem::coupling(int j, int k) const {
  auto it = couplings_.find(ordered(j, k));
  if (it == couplings_.end() || it->second == 0.0) {
    throw UnresolvedDelayError("no coupling J" + std::to_string(j) + std::to_string(k) +
                               " in the spin system");
  }
  return it->second;
}

// -------------------------------------------------------------- PulseSequence

PulseSequence::PulseSequence(std::string name, int spins, std::vector<PulseElement> elements)
    : name_(std::move(name)), n_(spins), elements_(std::move(elements)) {
  if (spins < 1 || spins > kMaxQubits) {
    throw SizeError("spin count " + std::to_string(spins) + " outside [1, 12]");
  }
  for (const auto& e : elements_) check_element(e, n_);
}

void PulseSequence::validate(const SpinSystem& sys) const {
  if (sys.spins() != n_) {
    throw DimensionError("sequence '" + name_ + "' is for " + std::to_string(n_) +
                         " spins, system has " + std::to_string(sys.spins()));
  }
  for (const auto& e : elements_) {
    check_element(e, n_);
    if (const auto* d = std::get_if<CouplingDelay>(&e)) {
      for (const auto& t : d->terms) {
        if (t.symbolic) (void)sys.coupling(t.j, t.k);
      }
    }
  }
}

// ------------------------------------------------------------------- physics

NoiseModel NoiseModel::uniform(int spins, double rate_hz) {
  return NoiseModel{std::vector<double>(static_cast<std::size_t>(spins), rate_hz), {}};
}

void NoiseModel::validate(int spins) const {
  if (dephasing_rates.size() != static_cast<std::size_t>(spins)) {
    throw DimensionError("need one dephasing rate per spin");
  }
  for (double r : dephasing_rates) {
    if (!(r >= 0.0) || !std::isfinite(r)) throw SizeError("dephasing rates must be finite and >= 0");
  }
  if (!(timing.spin_pulse >= 0.0) || !(timing.transition_pulse >= 0.0)) {
    throw SizeError("element wall times must be >= 0");
  }
}

Matrix2 rotation(double angle, double phase, double sense) {
  const double half = 0.5 * sense * angle;
  const double c = std::cos(half);
  const double s = std::sin(half);
  const Complex minus_i(0.0, -1.0);
  Matrix2 r;
  r << c, minus_i * s * std::polar(1.0, -phase), minus_i * s * std::polar(1.0, phase), c;
  return r;
}

std::vector<SpinPulse> expand_composite_z(const CompositeZ& z, CompositeZExpansion mode) {
  const double quarter = degrees(90.0);
  const double first_phase = mode == CompositeZExpansion::standard ? kPhaseMinusX : kPhaseX;
  return {SpinPulse{z.spins, quarter, first_phase}, SpinPulse{z.spins, z.angle, kPhaseY},
          SpinPulse{z.spins, quarter, kPhaseX}};
}

double element_duration(const PulseElement& e, const SpinSystem& sys, const ElementTiming& timing) {
  return std::visit(overloaded{
                        [&](const SpinPulse&) { return timing.spin_pulse; },
                        [&](const TransitionPulse&) { return timing.transition_pulse; },
                        [&](const CouplingDelay& d) {
                          double longest = 0.0;
                          for (const auto& t : d.terms) longest = std::max(longest, term_duration(t, sys));
                          return longest;
                        },
                        [&](const CompositeZ&) { return 3.0 * timing.spin_pulse; },
                    },
                    e);
}

UnitaryMatrix element_unitary(const PulseElement& e, const SpinSystem& sys, const Convention& conv) {
  check_element(e, sys.spins());
  const Index dim = hilbert_dimension(sys.spins());
  Matrix m = Matrix::Identity(dim, dim);
  apply_element(m, e, sys, conv);
  return UnitaryMatrix::unchecked(sys.spins(), std::move(m));
}

UnitaryMatrix sequence_unitary(const PulseSequence& seq, const SpinSystem& sys, const Convention& conv) {
  seq.validate(sys);
  const Index dim = hilbert_dimension(sys.spins());
  Matrix m = Matrix::Identity(dim, dim);
  for (const auto& e : seq.elements()) apply_element(m, e, sys, conv);
  return UnitaryMatrix::unchecked(sys.spins(), std::move(m));
}

DensityMatrix dephase(const DensityMatrix& rho, std::span<const double> rates_hz, double seconds) {
  const int n = rho.qubits();
  if (rates_hz.size() != static_cast<std::size_t>(n)) throw DimensionError("need one dephasing rate per spin");
  std::vector<double> decay(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) decay[static_cast<std::size_t>(s)] = std::exp(-rates_hz[static_cast<std::size_t>(s)] * seconds);
  Matrix m = rho.entries();
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      const auto differ = static_cast<std::uint64_t>(r ^ c);
      if (differ == 0) continue;
      double f = 1.0;
      for (int s = 1; s <= n; ++s) {
        if (differ & basis::qubit_mask(s, n)) f *= decay[static_cast<std::size_t>(s - 1)];
      }
      m(r, c) *= f;
    }
  }
  return DensityMatrix(n, std::move(m), rho.kind());
}

DensityMatrix run(const PulseSequence& seq, const SpinSystem& sys, const DensityMatrix& rho,
                  const std::optional<NoiseModel>& noise, const Convention& conv) {
  seq.validate(sys);
  if (rho.qubits() != sys.spins()) throw DimensionError("density matrix does not match the spin system");
  if (noise) noise->validate(sys.spins());

  DensityMatrix current = rho;
  for (const auto& e : seq.elements()) {
    current = conjugate(element_unitary(e, sys, conv), current);
    if (noise) current = dephase(current, noise->dephasing_rates, element_duration(e, sys, noise->timing));
  }
  return current;
}

DensityMatrix thermal_deviation(const ThermalWeights& w) {
  Matrix m = Matrix::Zero(4, 4);
  for (Index a = 0; a < 4; ++a) {
    const auto idx = static_cast<std::uint64_t>(a);
    m(a, a) = w.a * iz(idx, 1, 2) + w.b * iz(idx, 2, 2);
  }
  return DensityMatrix(2, std::move(m), DensityMatrix::Kind::deviation);
}

DensityMatrix prepare_pseudopure_temporal_avg(const SpinSystem& sys, const ThermalWeights& w,
                                              const Convention& conv) {
  if (sys.spins() != 2) {
    throw SizeError("temporal-averaging preparation is defined for two spins, got " +
                    std::to_string(sys.spins()));
  }
  const DensityMatrix eq = thermal_deviation(w);
  Matrix sum = eq.entries();
  for (const char* name : {"pseudopure-a", "pseudopure-b"}) {
    sum += run(pseudopure_sequence(name), sys, eq, std::nullopt, conv).entries();
  }
  return DensityMatrix(2, sum / 3.0, DensityMatrix::Kind::deviation);
}

bool simultaneous_transition_check(std::span<const TransitionPulse> pulses, const SpinSystem& sys,
                                   const Convention& conv) {
  const int n = sys.spins();
  std::set<std::uint64_t> used;
  for (const auto& p : pulses) {
    check_transition(p, n);
    for (int label : {p.from, p.to}) {
      if (!used.insert(basis::index_from_label(label, n)).second) return false;
    }
  }

  std::vector<UnitaryMatrix> factors;
  factors.reserve(pulses.size());
  for (const auto& p : pulses) factors.push_back(element_unitary(p, sys, conv));

  // Disjoint two-level rotations commute; confirm on the actual matrices.
  auto product = [&](const std::vector<std::size_t>& order) {
    UnitaryMatrix u = UnitaryMatrix::identity(n);
    for (std::size_t i : order) u = factors[i] * u;
    return u;
  };
  std::vector<std::size_t> order(factors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (order.size() <= 6) {
    const UnitaryMatrix reference = product(order);
    while (std::next_permutation(order.begin(), order.end())) {
      if (max_abs_difference(product(order).entries(), reference.entries()) > 1e-12) {
        throw std::logic_error("disjoint transition pulses failed to commute");
      }
    }
  } else {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (std::size_t j = i + 1; j < factors.size(); ++j) {
        const Matrix& a = factors[i].entries();
        const Matrix& b = factors[j].entries();
        if (max_abs_difference(a * b, b * a) > 1e-12) {
          throw std::logic_error("disjoint transition pulses failed to commute");
        }
      }
    }
  }
  return true;
}

}  // namespace spinqft::nmr
