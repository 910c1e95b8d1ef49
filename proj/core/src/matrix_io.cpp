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

#include "spinqft/matrix_io.hpp"

#include <string>

#include "spinqft/error.hpp"

namespace spinqft {

nlohmann::json matrix_to_json(int n, const Matrix& m) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    nlohmann::json re_row = nlohmann::json::array();
    nlohmann::json im_row = nlohmann::json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return {{"n", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

nlohmann::json to_json(const DensityMatrix& rho) { return matrix_to_json(rho.qubits(), rho.entries()); }

nlohmann::json to_json(const UnitaryMatrix& u) { return matrix_to_json(u.qubits(), u.entries()); }

Matrix matrix_from_json(const nlohmann::json& j, int* n_out) {
  if (!j.is_object() || !j.contains("n") || !j.contains("re") || !j.contains("im")) {
    throw DimensionError("matrix JSON needs keys n, re, im");
  }
  const int n = j.at("n").get<int>();
  const Index dim = hilbert_dimension(n);
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (!re.is_array() || !im.is_array() || static_cast<Index>(re.size()) != dim ||
      static_cast<Index>(im.size()) != dim) {
    throw DimensionError("matrix JSON must have " + std::to_string(dim) + " rows");
  }
  Matrix m(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    const auto& re_row = re.at(static_cast<std::size_t>(r));
    const auto& im_row = im.at(static_cast<std::size_t>(r));
    if (static_cast<Index>(re_row.size()) != dim || static_cast<Index>(im_row.size()) != dim) {
      throw DimensionError("matrix JSON row " + std::to_string(r) + " has wrong length");
    }
    for (Index c = 0; c < dim; ++c) {
      m(r, c) = Complex(re_row.at(static_cast<std::size_t>(c)).get<double>(),
                        im_row.at(static_cast<std::size_t>(c)).get<double>());
    }
  }
  if (n_out != nullptr) *n_out = n;
  return m;
}

DensityMatrix density_from_json(const nlohmann::json& j, DensityMatrix::Kind kind) {
  int n = 0;
  Matrix m = matrix_from_json(j, &n);
  return DensityMatrix(n, std::move(m), kind);
}

UnitaryMatrix unitary_from_json(const nlohmann::json& j) {
  int n = 0;
  Matrix m = matrix_from_json(j, &n);
  return UnitaryMatrix(n, std::move(m));
}

}  // namespace spinqft
