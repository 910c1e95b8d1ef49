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

// Time cost of the serial and parallel QFT on liquid-state NMR and on the
// electron/nuclear solid-state architecture. Every coupling term is
// evaluated twice, in closed form and as the direct double sum over qubit
// pairs, and the two must agree to 1e-12 relative.
//
// Two quirks of the published formulas are reproduced as printed:
//  * at n = 1 the serial coupling term is kappa/2 although a one-qubit QFT
//    needs no coupling;
//  * the solid-state SWAP term is 2 n Delta (linear), although charging two
//    SWAPs to each of the n(n+1)/2 summed pairs would make it quadratic.

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace spinqft::cost {

/// Liquid-state NMR: scalar coupling J, kappa = pi / J.
struct LiquidParams {
  double delta = 10e-6;       ///< s, one selective Hadamard
  double coupling_hz = 215.0; ///< J

  double kappa() const;
  void validate() const;
};

/// Solid state: dipolar coupling d, SWAP time Delta, kappa = pi / d.
struct SolidParams {
  double delta = 10e-9;
  double dipolar_hz = 10e6;
  double swap_time = 100e-9;

  double kappa() const;
  void validate() const;
};

/// d must fall in this band (covers the 10-50 MHz electron dipolar range).
inline constexpr double kMinDipolarHz = 1e6;
inline constexpr double kMaxDipolarHz = 1e9;

using ArchitectureParams = std::variant<LiquidParams, SolidParams>;

enum class Schedule { serial, parallel };

enum class Model { serial_liquid, parallel_liquid, serial_solid, parallel_solid };

std::string to_string(Model m);

struct CostBreakdown {
  int n = 0;
  Model model = Model::serial_liquid;
  double pulse_term = 0.0;
  double coupling_term = 0.0;
  double swap_term = 0.0;
  double total = 0.0;
};

/// n - 1 + 2^-n.
double coupling_sum_closed_form(int n);
/// sum_{j=0}^{n-1} sum_{k=j+1}^{n} 2^(j-k), evaluated term by term.
double coupling_sum_direct(int n);
/// 2^n times the double sum, in exact integer arithmetic (n <= 58; larger sums overflow 64 bits).
std::uint64_t coupling_sum_scaled_exact(int n);

CostBreakdown t_serial_liquid(int n, const LiquidParams& p);
CostBreakdown t_serial_solid(int n, const SolidParams& p);
/// kappa n / 2; no pulse or SWAP term.
CostBreakdown t_parallel(int n, const LiquidParams& p);
CostBreakdown t_parallel(int n, const SolidParams& p);

CostBreakdown evaluate(Schedule s, int n, const ArchitectureParams& p);

/// One row per n in [n_first, n_last]; throws SizeError on an empty range.
std::vector<CostBreakdown> sweep(Schedule s, const ArchitectureParams& p, int n_first, int n_last);

/// Header n,pulse_term,coupling_term,swap_term,total; shortest round-trip
/// decimal formatting.
void write_csv(std::ostream& os, std::span<const CostBreakdown> rows);

nlohmann::json to_json(const CostBreakdown& c);

}  // namespace spinqft::cost
