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

#include <cstdint>
#include <optional>
#include <string>

namespace spinqft::cli {

struct VerifyOptions {
  int n = 2;
  std::string decomposition = "serial";
  int max_distance = -1;  ///< approximate only; -1 keeps every rotation
  bool swaps = false;
  std::string circuit_file;
  std::string circuit_out;
  std::string out;
};

struct CostOptions {
  std::string model = "liquid";
  std::string schedule = "serial";
  double coupling_hz = 215.0;
  double delta = -1.0;  ///< < 0: architecture default
  double dipolar_hz = 10e6;
  double swap_time = 100e-9;
  std::string n_ranges = "1..10";
  std::string format = "csv";
  std::string out;
};

struct SimulateOptions {
  std::string sequence;
  std::string sequence_file;
  std::optional<double> t2;
  std::optional<double> rate;
  std::optional<double> coupling_hz;
  std::string weights = "1,1";
  bool tomography = false;
  std::optional<double> perturb;
  std::optional<std::uint64_t> seed;
  bool no_reverse = false;
  std::string out;
};

struct RoundtripOptions {
  int n = 2;
  int count = 100;
  std::optional<std::uint64_t> seed;
  std::string out;
};

struct Fig2Options {
  std::string sequences = "serial-n2,parallel-n2,selective-n2";
  std::optional<double> t2;
  std::string format = "csv";
  std::string out;
};

int run_verify(const VerifyOptions& o);
int run_cost(const CostOptions& o);
int run_simulate(const SimulateOptions& o);
int run_tomo_roundtrip(const RoundtripOptions& o);
int run_export_fig2(const Fig2Options& o);

}  // namespace spinqft::cli
