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
#include <sstream>

#include "oracles.hpp"
#include "spinqft/costmodel.hpp"
#include "spinqft/error.hpp"

namespace spinqft::cost {
namespace {

const LiquidParams kLiquid{10e-6, 215.0};

TEST(CouplingSum, ClosedFormMatchesOracle) {
  for (int n = 1; n <= 60; ++n) {
    const long double ref = oracle::coupling_double_sum(n);
    EXPECT_NEAR(coupling_sum_closed_form(n), static_cast<double>(ref), 1e-12 * static_cast<double>(ref)) << n;
    EXPECT_NEAR(coupling_sum_direct(n), static_cast<double>(ref), 1e-12 * static_cast<double>(ref)) << n;
  }
  for (int n = 1; n <= 58; ++n) {
    // 2^n (n - 1) + 1 exactly.
    const std::uint64_t expected = (std::uint64_t{1} << n) * static_cast<std::uint64_t>(n - 1) + 1;
    EXPECT_EQ(coupling_sum_scaled_exact(n), expected) << n;
  }
  EXPECT_THROW(coupling_sum_scaled_exact(59), SizeError);
  EXPECT_THROW(coupling_sum_closed_form(0), SizeError);
}

TEST(SerialLiquid, TwoQubitExample) {
  const auto c = t_serial_liquid(2, kLiquid);
  const double kappa = std::numbers::pi / 215.0;
  EXPECT_NEAR(c.coupling_term, kappa * 1.25, 1e-15);
  EXPECT_NEAR(c.coupling_term, 18.26e-3, 0.01e-3);
  EXPECT_NEAR(c.total, 18.28e-3, 0.01e-3);
  EXPECT_DOUBLE_EQ(c.pulse_term, 2 * 10e-6);
  EXPECT_EQ(c.swap_term, 0.0);
}

TEST(SerialLiquid, SingleQubitKeepsHalfKappa) {
  const auto c = t_serial_liquid(1, kLiquid);
  EXPECT_NEAR(c.coupling_term, kLiquid.kappa() / 2, 1e-15);
}

TEST(SerialLiquid, LinearScaling) {
  double last = 0.0;
  for (int n = 1; n <= 200; ++n) {
    const auto c = t_serial_liquid(n, kLiquid);
    const double per_qubit = c.total / n;
    EXPECT_LE(per_qubit, kLiquid.delta + kLiquid.kappa());
    if (n > 1) {
      EXPECT_GE(per_qubit, last - 1e-15);
    }
    last = per_qubit;
  }
  EXPECT_NEAR(last, kLiquid.delta + kLiquid.kappa(), 0.01 * (kLiquid.delta + kLiquid.kappa()));
}

TEST(Parallel, Examples) {
  EXPECT_NEAR(t_parallel(2, kLiquid).total, std::numbers::pi / 215.0, 1e-15);
  EXPECT_NEAR(t_parallel(2, kLiquid).total, 14.61e-3, 0.01e-3);
  EXPECT_DOUBLE_EQ(t_parallel(4, kLiquid).total, 2 * kLiquid.kappa());
  const auto rows = sweep(Schedule::parallel, kLiquid, 1, 10);
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_DOUBLE_EQ(rows.back().total, 5 * kLiquid.kappa());
}

TEST(Parallel, RatioApproachesTwoFromBelow) {
  double prev = 0.0;
  for (int n = 2; n <= 400; ++n) {
    const double r = t_serial_liquid(n, kLiquid).coupling_term / t_parallel(n, kLiquid).coupling_term;
    EXPECT_LT(r, 2.0);
    EXPECT_GT(r, prev);
    prev = r;
  }
  EXPECT_NEAR(prev, 2.0, 0.01);
}

TEST(Solid, SwapTermIsLinear) {
  const SolidParams p{10e-9, 10e6, 100e-9};
  const auto c = t_serial_solid(3, p);
  // Hand evaluation: 3 * 10 ns + (pi / 1e7) * (2 + 1/8) + 2 * 3 * 100 ns.
  const double expected = 3e-8 + (std::numbers::pi / 1e7) * 2.125 + 6e-7;
  EXPECT_NEAR(c.total, expected, 1e-20);
  EXPECT_DOUBLE_EQ(c.swap_term, 6e-7);
  EXPECT_EQ(t_parallel(3, p).swap_term, 0.0);
}

TEST(Params, Validation) {
  EXPECT_THROW(t_serial_liquid(2, LiquidParams{-1.0, 215.0}), SizeError);
  EXPECT_THROW(t_serial_liquid(2, LiquidParams{1e-6, 0.0}), SizeError);
  EXPECT_THROW(t_serial_solid(2, SolidParams{1e-9, 1e3, 1e-7}), SizeError);
  EXPECT_THROW(t_serial_solid(2, SolidParams{1e-9, 1e7, 0.0}), SizeError);
  EXPECT_THROW(sweep(Schedule::serial, kLiquid, 5, 4), SizeError);
  EXPECT_THROW(sweep(Schedule::serial, kLiquid, 0, 4), SizeError);
}

TEST(Output, CsvAndJson) {
  const auto rows = sweep(Schedule::serial, kLiquid, 1, 3);
  std::ostringstream os;
  write_csv(os, rows);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "n,pulse_term,coupling_term,swap_term,total");
  int count = 0;
  while (std::getline(is, line)) {
    ++count;
    std::istringstream fields(line);
    std::string n_text;
    std::getline(fields, n_text, ',');
    EXPECT_EQ(std::stoi(n_text), count);
    std::string field;
    std::vector<double> values;
    while (std::getline(fields, field, ',')) values.push_back(std::stod(field));
    ASSERT_EQ(values.size(), 4u);
    // Shortest round-trip formatting reproduces the doubles exactly.
    EXPECT_EQ(values[3], rows[static_cast<std::size_t>(count - 1)].total);
  }
  EXPECT_EQ(count, 3);

  const auto j = to_json(rows[1]);
  EXPECT_EQ(j.at("model"), "serial_liquid");
  EXPECT_EQ(j.at("n"), 2);
}

}  // namespace
}  // namespace spinqft::cost
