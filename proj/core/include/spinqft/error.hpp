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

#include <stdexcept>
#include <string>

namespace spinqft {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Qubit count, Hilbert-space dimension or range parameter out of bounds.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Operands with incompatible dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix that violates the invariant of the type it is wrapped in.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Invalid qubit/spin/transition label.
class LabelError : public Error {
 public:
  using Error::Error;
};

/// Lookup of a name that is not in a library (sequences, models, ...).
class UnknownNameError : public Error {
 public:
  using Error::Error;
};

/// Pulse-sequence text that does not parse. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Symbolic coupling delay that names a coupling absent from the spin system.
class UnresolvedDelayError : public Error {
 public:
  using Error::Error;
};

/// Readout data that cannot determine the density matrix.
class IncompleteReadoutError : public Error {
 public:
  using Error::Error;
};

/// Fidelity requested for a zero-norm matrix.
class UndefinedFidelityError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinqft
