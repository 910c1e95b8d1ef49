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

// Simulated state tomography with qubit-selective 90-degree readout pulses,
// and a signal-weighted correlation fidelity for deviation matrices.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinqft/qcore.hpp"

namespace spinqft::tomo {

/// Largest register the tomography design is built for (3^n experiments,
/// 4^n - 1 unknowns).
inline constexpr int kMaxTomographyQubits = 4;

enum class ReadoutPulse { none, x90, y90 };

std::string to_string(ReadoutPulse p);

/// One readout pulse per qubit, qubit 1 first.
struct ReadoutExperiment {
  std::vector<ReadoutPulse> pulses;
  bool operator==(const ReadoutExperiment&) const = default;
};

/// All 3^n experiments, qubit 1 varying slowest.
std::vector<ReadoutExperiment> all_experiments(int n);

/// A detected observable: a transverse Pauli (x or y) on `spin`, times
/// sigma_z on every spin set in `z_mask` (bit of qubit q as in basis::qubit_mask).
struct Observable {
  int spin = 1;
  char axis = 'x';
  std::uint64_t z_mask = 0;
};

/// The n * 2^n observables read out in every experiment, in fixed order.
const std::vector<Observable>& observables(int n);

Matrix observable_matrix(const Observable& o, int n);

/// Optional additive Gaussian noise on every expectation value.
struct Perturbation {
  double sigma = 0.0;
  std::uint64_t seed = 0;
};

/// Tr(R rho R^dagger O) for every observable O, after the experiment's
/// readout pulses R.
std::vector<double> measure(const DensityMatrix& rho, const ReadoutExperiment& e,
                            const std::optional<Perturbation>& noise = std::nullopt);

struct ReadoutSet {
  int n = 0;
  std::vector<ReadoutExperiment> experiments;
  std::vector<std::vector<double>> values;  ///< one row per experiment
};

/// Every experiment of all_experiments(n). With a perturbation, each
/// experiment draws from one generator seeded once.
ReadoutSet measure_all(const DensityMatrix& rho, const std::optional<Perturbation>& noise = std::nullopt);

/// The linear map from Pauli coefficients to readouts.
struct DesignReport {
  int n = 0;
  Index rows = 0;
  Index unknowns = 0;
  Index rank = 0;
  double smallest_singular_value = 0.0;
  double largest_singular_value = 0.0;
  bool informationally_complete() const { return rank == unknowns; }
};

DesignReport design(int n);

/// Least-squares inversion of the readouts; `trace` fixes the identity
/// component the readouts cannot see. Throws IncompleteReadoutError if the
/// experiments do not determine every traceless component.
DensityMatrix reconstruct(const ReadoutSet& readouts, double trace = 0.0);

struct FidelityReport {
  double correlation = 0.0;
  double signal_retention = 0.0;
  double fidelity = 0.0;
};

/// correlation = Tr(th exp) / sqrt(Tr(th^2) Tr(exp^2)),
/// signal_retention = Tr(exp^2) / Tr(init^2), fidelity = correlation * sqrt(retention).
/// Throws UndefinedFidelityError if any argument has zero norm.
FidelityReport fidelity(const DensityMatrix& theory, const DensityMatrix& experiment,
                        const DensityMatrix& initial);

nlohmann::json to_json(const FidelityReport& r);

/// Reported hardware fidelities, kept for documentation; no simulation here
/// reproduces them.
struct ReportedFidelity {
  static constexpr double serial = 0.79;
  static constexpr double parallel = 0.80;
  static constexpr double selective = 0.85;
};

/// Ideal QFT of `input`. With `relabel`, expressed in the qubit order the
/// time-ordered circuits leave behind (bit-reversed), so it can be compared
/// directly with a simulated output.
DensityMatrix ideal_qft_output(const DensityMatrix& input, bool relabel = true);

/// Bar-chart table: panel,row,col,re,im with ket labels for row and col.
void write_bar_chart_csv(std::ostream& out, const std::vector<std::pair<std::string, DensityMatrix>>& panels);

}  // namespace spinqft::tomo
