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

// Hamiltonian-level simulation of weakly coupled spin-1/2 systems driven by
// hard (spin-selective) pulses, transition-selective pulses, J-coupling
// delays and composite z-rotations.
//
// Pulses are instantaneous rotations
//   R_phi(theta) = exp(-i s theta (I_x cos phi + I_y sin phi)),  s = pulse sense,
// and a delay with per-pair durations t_jk evolves under
//   exp(-i c 2 pi sum J_jk t_jk I_z^j I_z^k),                    c = coupling sign.
// Sequences are stored left to right in time.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "spinqft/qcore.hpp"

namespace spinqft::nmr {

inline constexpr double kPhaseX = 0.0;
inline constexpr double kPhaseY = 1.5707963267948966;
inline constexpr double kPhaseMinusX = 3.141592653589793;
inline constexpr double kPhaseMinusY = 4.71238898038469;

/// Chloroform 13C-1H coupling.
inline constexpr double kChloroformJ = 215.0;

double degrees(double deg);

class SpinSystem {
 public:
  using Pair = std::pair<int, int>;

  /// Couplings keyed by (j, k); (k, j) is the same coupling. Offsets in Hz,
  /// one per spin, default 0 (on resonance).
  SpinSystem(int n, std::map<Pair, double> couplings, std::vector<double> offsets = {});

  /// Two spins, spin 1 = 13C, spin 2 = 1H, J12 = 215 Hz.
  static SpinSystem chloroform();
  /// n spins with the same J on every pair.
  static SpinSystem uniform(int n, double coupling_hz = kChloroformJ);

  int spins() const noexcept { return n_; }
  /// Throws UnresolvedDelayError if the pair has no coupling.
  double coupling(int j, int k) const;
  bool has_coupling(int j, int k) const;
  const std::map<Pair, double>& couplings() const noexcept { return couplings_; }
  const std::vector<double>& offsets() const noexcept { return offsets_; }

 private:
  int n_;
  std::map<Pair, double> couplings_;
  std::vector<double> offsets_;
};

/// Hard pulse on every listed spin.
struct SpinPulse {
  std::vector<int> spins;
  double angle = 0.0;  ///< rad
  double phase = 0.0;  ///< rad; 0 = x, pi/2 = y, pi = -x, 3pi/2 = -y
  bool operator==(const SpinPulse&) const = default;
};

/// Rotation confined to span{|from-1>, |to-1>} (1-based transition labels).
struct TransitionPulse {
  int from = 1;
  int to = 2;
  double angle = 0.0;
  double phase = 0.0;
  bool operator==(const TransitionPulse&) const = default;
};

/// One coupled pair's evolution time: `value` seconds, or, when symbolic,
/// 1 / (value * J_jk).
struct DelayTerm {
  int j = 1;
  int k = 2;
  double value = 0.0;
  bool symbolic = false;
  bool operator==(const DelayTerm&) const = default;
};

/// Simultaneous evolution of the listed pairs; unlisted pairs do not evolve.
struct CouplingDelay {
  std::vector<DelayTerm> terms;
  bool operator==(const CouplingDelay&) const = default;
};

/// z-rotation by `angle` on each listed spin, realized as a pulse sandwich.
struct CompositeZ {
  std::vector<int> spins;
  double angle = 0.0;
  bool operator==(const CompositeZ&) const = default;
};

using PulseElement = std::variant<SpinPulse, TransitionPulse, CouplingDelay, CompositeZ>;

class PulseSequence {
 public:
  PulseSequence() = default;
  PulseSequence(std::string name, int spins, std::vector<PulseElement> elements);

  const std::string& name() const noexcept { return name_; }
  int spins() const noexcept { return n_; }
  const std::vector<PulseElement>& elements() const noexcept { return elements_; }

  /// Throws LabelError / UnresolvedDelayError if any element does not fit `sys`.
  void validate(const SpinSystem& sys) const;

  bool operator==(const PulseSequence&) const = default;

 private:
  std::string name_;
  int n_ = 0;
  std::vector<PulseElement> elements_;
};

/// How a composite-z element is expanded into hard pulses (in time order).
enum class CompositeZExpansion {
  /// 90_x, theta_y, 90_x as printed in the pulse-table caption.
  caption_literal,
  /// 90_-x, theta_y, 90_x: an exact z-rotation exp(-i theta I_z).
  standard,
};

/// Global sign conventions. `calibrated()` is the setting under which the
/// reference two-spin sequences (pseudopure preparation, serial and
/// selective QFT) reproduce the ideal QFT; see README.
struct Convention {
  double pulse_sense = 1.0;
  double coupling_sign = -1.0;
  CompositeZExpansion composite_z = CompositeZExpansion::standard;

  static Convention calibrated() { return {}; }
  /// Unflipped textbook signs with the caption's literal composite-z form.
  static Convention textbook() { return {1.0, 1.0, CompositeZExpansion::caption_literal}; }
};

struct ElementTiming {
  double spin_pulse = 10e-6;
  double transition_pulse = 6.5e-3;
};

/// Pure dephasing: during an element of wall time t, every coherence
/// between states differing on spin j is damped by exp(-rate_j t).
struct NoiseModel {
  std::vector<double> dephasing_rates;  ///< Hz, one per spin, >= 0
  ElementTiming timing{};

  static NoiseModel uniform(int spins, double rate_hz);
  void validate(int spins) const;
};

/// Rotation matrix R_phi(theta) for one spin under `sense`.
Matrix2 rotation(double angle, double phase, double sense = 1.0);

/// The hard pulses a composite-z element expands to, in time order.
std::vector<SpinPulse> expand_composite_z(const CompositeZ& z, CompositeZExpansion mode);

/// Wall time of an element; delays last as long as their longest pair.
double element_duration(const PulseElement& e, const SpinSystem& sys, const ElementTiming& timing = {});

UnitaryMatrix element_unitary(const PulseElement& e, const SpinSystem& sys,
                              const Convention& conv = Convention::calibrated());
/// Product over elements, first element rightmost.
UnitaryMatrix sequence_unitary(const PulseSequence& seq, const SpinSystem& sys,
                               const Convention& conv = Convention::calibrated());

/// Propagates rho through the sequence; with noise, each element's unitary is
/// followed by dephasing for its wall time.
DensityMatrix run(const PulseSequence& seq, const SpinSystem& sys, const DensityMatrix& rho,
                  const std::optional<NoiseModel>& noise = std::nullopt,
                  const Convention& conv = Convention::calibrated());

/// The dephasing channel alone.
DensityMatrix dephase(const DensityMatrix& rho, std::span<const double> rates_hz, double seconds);

/// Weights of the thermal deviation a I_z^1 + b I_z^2.
struct ThermalWeights {
  double a = 1.0;
  double b = 1.0;
  /// 13C on spin 1, 1H (gamma about 4x larger) on spin 2.
  static ThermalWeights gyromagnetic() { return {1.0, 4.0}; }
};

DensityMatrix thermal_deviation(const ThermalWeights& w);

/// Average of the thermal deviation and its images under the two
/// population-cycling sequences ("pseudopure-a", "pseudopure-b"). Needs a
/// two-spin system.
DensityMatrix prepare_pseudopure_temporal_avg(const SpinSystem& sys, const ThermalWeights& w = {},
                                              const Convention& conv = Convention::calibrated());

/// Names of the reference QFT pulse sequences, in table order.
const std::vector<std::string>& table1_names();
/// Parsed reference sequence; throws UnknownNameError.
PulseSequence table1_sequence(std::string_view name);
/// DSL text behind a library sequence (including the pseudopure cycles).
std::string_view library_source(std::string_view name);
/// The pseudopure cycling sequences.
PulseSequence pseudopure_sequence(std::string_view name);

/// True iff the pulses' two-level subspaces share no basis state. When true,
/// also confirms numerically that every ordering gives the same unitary.
bool simultaneous_transition_check(std::span<const TransitionPulse> pulses, const SpinSystem& sys,
                                   const Convention& conv = Convention::calibrated());

}  // namespace spinqft::nmr
