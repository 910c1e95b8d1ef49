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

// JSON interchange for matrices: {"n": int, "re": [[...]], "im": [[...]]},
// rows in basis order.

#include <nlohmann/json.hpp>

#include "spinqft/qcore.hpp"

namespace spinqft {

nlohmann::json matrix_to_json(int n, const Matrix& m);
nlohmann::json to_json(const DensityMatrix& rho);
nlohmann::json to_json(const UnitaryMatrix& u);

/// Throws DimensionError on ragged or mis-sized arrays, plus the
/// invariant errors of the target type.
Matrix matrix_from_json(const nlohmann::json& j, int* n_out = nullptr);
DensityMatrix density_from_json(const nlohmann::json& j,
                                DensityMatrix::Kind kind = DensityMatrix::Kind::hermitian);
UnitaryMatrix unitary_from_json(const nlohmann::json& j);

}  // namespace spinqft
