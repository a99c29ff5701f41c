// Copyright 2026 The QSL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <vector>

#include "qsl/core/register_shape.hpp"

namespace qsl::core {

/// True iff a unit scalar c exists with max|U - cV| <= tol; c is taken from
/// the entry ratio at the largest-magnitude position.
bool equal_up_to_global_phase(const Matrix& u, const Matrix& v, double tol = kEqualityTol);

struct LocalPhaseSolution {
    std::vector<double> carrier_phases;  // Z_phi angle per carrier
    double global_phase;                 // (tensor of Z_phi) * U = e^{i global} * V
};

/**
 * For diagonal unitaries U, V on an all-qubit shape, finds per-carrier Z
 * angles and a global phase with (⊗ Z_{phi_i}) U = e^{i g} V, or nullopt if
 * no assignment exists. Solved as a linear system on phase exponents mod 2π.
 */
std::optional<LocalPhaseSolution> local_phase_equivalence(const Matrix& u, const Matrix& v,
                                                          const RegisterShape& shape,
                                                          double tol = kEqualityTol);

}  // namespace qsl::core
