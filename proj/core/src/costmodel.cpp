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

#include "spinqft/costmodel.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinqft/error.hpp"

namespace spinqft::cost {

namespace {

void check_n(int n) {
  if (n < 1) throw SizeError("qubit count must be >= 1, got " + std::to_string(n));
}

void cross_check(int n) {
  const double closed = coupling_sum_closed_form(n);
  const double direct = coupling_sum_direct(n);
  if (std::abs(closed - direct) > 1e-12 * closed) {
    throw std::logic_error("coupling closed form and double sum disagree at n = " +
                           std::to_string(n));
  }
}

CostBreakdown finish(CostBreakdown c) {
  c.total = c.pulse_term + c.coupling_term + c.swap_term;
  return c;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

}  // namespace

double LiquidParams::kappa() const { return std::numbers::pi / coupling_hz; }

void LiquidParams::validate() const {
  if (!(delta >= 0.0) || !std::isfinite(delta)) throw SizeError("delta must be >= 0");
  if (!(coupling_hz > 0.0) || !std::isfinite(coupling_hz)) throw SizeError("J must be > 0");
}

double SolidParams::kappa() const { return std::numbers::pi / dipolar_hz; }

void SolidParams::validate() const {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw SizeError("delta must be > 0");
  if (!(swap_time > 0.0) || !std::isfinite(swap_time)) throw SizeError("Delta must be > 0");
  if (!(dipolar_hz >= kMinDipolarHz && dipolar_hz <= kMaxDipolarHz)) {
    throw SizeError("dipolar coupling d = " + format_double(dipolar_hz) +
                    " Hz outside the accepted band [1e6, 1e9] Hz");
  }
}

std::string to_string(Model m) {
  switch (m) {
    case Model::serial_liquid: return "serial_liquid";
    case Model::parallel_liquid: return "parallel_liquid";
    case Model::serial_solid: return "serial_solid";
    case Model::parallel_solid: return "parallel_solid";
  }
  return "unknown";
}

double coupling_sum_closed_form(int n) {
  check_n(n);
  return static_cast<double>(n - 1) + std::ldexp(1.0, -n);
}

double coupling_sum_direct(int n) {
  check_n(n);
  double sum = 0.0;
  for (int j = 0; j <= n - 1; ++j) {
    for (int k = j + 1; k <= n; ++k) sum += std::ldexp(1.0, j - k);
  }
  return sum;
}

std::uint64_t coupling_sum_scaled_exact(int n) {
  check_n(n);
  if (n > 58) throw SizeError("exact coupling sum limited to n <= 58");
  std::uint64_t sum = 0;
  for (int j = 0; j <= n - 1; ++j) {
    for (int k = j + 1; k <= n; ++k) sum += std::uint64_t{1} << (n + j - k);
  }
  return sum;
}

CostBreakdown t_serial_liquid(int n, const LiquidParams& p) {
  check_n(n);
  p.validate();
  cross_check(n);
  CostBreakdown c{.n = n, .model = Model::serial_liquid};
  c.pulse_term = n * p.delta;
  c.coupling_term = p.kappa() * coupling_sum_closed_form(n);
  return finish(c);
}

CostBreakdown t_serial_solid(int n, const SolidParams& p) {
  check_n(n);
  p.validate();
  cross_check(n);
  CostBreakdown c{.n = n, .model = Model::serial_solid};
  c.pulse_term = n * p.delta;
  c.swap_term = 2.0 * n * p.swap_time;
  c.coupling_term = p.kappa() * coupling_sum_closed_form(n);
  return finish(c);
}

CostBreakdown t_parallel(int n, const LiquidParams& p) {
  check_n(n);
  p.validate();
  CostBreakdown c{.n = n, .model = Model::parallel_liquid};
  c.coupling_term = p.kappa() * n / 2.0;
  return finish(c);
}

CostBreakdown t_parallel(int n, const SolidParams& p) {
  check_n(n);
  p.validate();
  CostBreakdown c{.n = n, .model = Model::parallel_solid};
  c.coupling_term = p.kappa() * n / 2.0;
  return finish(c);
}

CostBreakdown evaluate(Schedule s, int n, const ArchitectureParams& p) {
  return std::visit(
      [&](const auto& params) {
        using P = std::decay_t<decltype(params)>;
        if (s == Schedule::parallel) return t_parallel(n, params);
        if constexpr (std::is_same_v<P, LiquidParams>) {
          return t_serial_liquid(n, params);
        } else {
          return t_serial_solid(n, params);
        }
      },
      p);
}

std::vector<CostBreakdown> sweep(Schedule s, const ArchitectureParams& p, int n_first, int n_last) {
  if (n_first < 1 || n_last < n_first) {
    throw SizeError("empty or invalid qubit range " + std::to_string(n_first) + ".." +
                    std::to_string(n_last));
  }
  std::vector<CostBreakdown> rows;
  rows.reserve(static_cast<std::size_t>(n_last - n_first + 1));
  for (int n = n_first; n <= n_last; ++n) rows.push_back(evaluate(s, n, p));
  return rows;
}

void write_csv(std::ostream& os, std::span<const CostBreakdown> rows) {
  os << "n,pulse_term,coupling_term,swap_term,total\n";
  for (const auto& r : rows) {
    os << r.n << ',' << format_double(r.pulse_term) << ',' << format_double(r.coupling_term)
       << ',' << format_double(r.swap_term) << ',' << format_double(r.total) << '\n';
  }
}

nlohmann::json to_json(const CostBreakdown& c) {
  return {{"n", c.n},
          {"model", to_string(c.model)},
          {"pulse_term", c.pulse_term},
          {"coupling_term", c.coupling_term},
          {"swap_term", c.swap_term},
          {"total", c.total}};
}

}  // namespace spinqft::cost
