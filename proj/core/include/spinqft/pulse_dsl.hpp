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

// Text form of pulse sequences. Whitespace-separated tokens, '#' comments:
//
//   90y@s1,s2            hard pulse, 90 deg, phase y, on spins 1 and 2
//   180-x@s3             phase -x (also -y)
//   90x@t3-4             transition-selective pulse on transition 3 -> 4
//   45z@s1  135-z@s3     composite z-rotation (z45@s1 is accepted too)
//   delay:1/(4*J12)      evolve pair (1,2) for 1/(4 J12)
//   delay:{1/(4*J12),1/(8*J13)}   simultaneous evolution of several pairs
//   delay:2.5e-3@J12     evolve pair (1,2) for 2.5 ms
//   J(1,12)              pair syntax for spin labels above 9
//   name=serial-n2  spins=2       optional header directives
//
// Without spins=, the spin count is the largest label used.

#include <string>
#include <string_view>

#include "spinqft/nmrsim.hpp"

namespace spinqft::nmr {

/// Throws ParseError with 1-based line/column.
PulseSequence parse_sequence(std::string_view text, std::string default_name = "custom");

/// Canonical text; parse_sequence(to_dsl(s)) == s up to angle rounding to
/// 1e-9 degrees.
std::string to_dsl(const PulseSequence& seq);

}  // namespace spinqft::nmr
