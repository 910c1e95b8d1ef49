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

#include <algorithm>

#include "spinqft/error.hpp"
#include "spinqft/nmrsim.hpp"
#include "spinqft/pulse_dsl.hpp"

namespace spinqft::nmr {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& sequence_sources();
}

namespace {

bool is_pseudopure(std::string_view name) { return name == "pseudopure-a" || name == "pseudopure-b"; }

}  // namespace

const std::vector<std::string>& table1_names() {
  static const std::vector<std::string> names{"serial-n2",   "serial-n3",   "parallel-n2",
                                              "parallel-n3", "selective-n2", "selective-n3"};
  return names;
}

std::string_view library_source(std::string_view name) {
  const auto& sources = detail::sequence_sources();
  auto it = std::find_if(sources.begin(), sources.end(), [&](const auto& e) { return e.first == name; });
  if (it == sources.end()) throw UnknownNameError("no library sequence named '" + std::string(name) + "'");
  return it->second;
}

PulseSequence table1_sequence(std::string_view name) {
  const auto& names = table1_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw UnknownNameError("no reference QFT sequence named '" + std::string(name) + "'");
  }
  return parse_sequence(library_source(name), std::string(name));
}

PulseSequence pseudopure_sequence(std::string_view name) {
  if (!is_pseudopure(name)) {
    throw UnknownNameError("no pseudopure cycling sequence named '" + std::string(name) + "'");
  }
  return parse_sequence(library_source(name), std::string(name));
}

}  // namespace spinqft::nmr
