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

#include "qsl/core/gates.hpp"

namespace qsl::core {

/**
 * Full-space unitary of a placed gate.
 *
 * The gate matrix acts on basis states whose targeted carriers are all in
 * levels {0,1}; any targeted level >= 2 is left alone, as is any basis state
 * whose control carrier differs from its control value (a control in a level
 * >= 2 never fires). A LevelSwap embeds as the permutation exchanging its
 * two levels.
 */
Matrix embed_gate(const PlacedGate& g, const RegisterShape& shape);

StateVector apply(const PlacedGate& g, const StateVector& s);
StateVector apply(const Circuit& c, const StateVector& s);

/// Product of the embedded gate unitaries, right-to-left in time order
/// (gates[0] acts first).
Matrix unitary_of(const Circuit& c);

/// Rows/columns of u restricted to basis states whose carriers are all in
/// levels {0,1}, in the induced all-qubit ordering.
Matrix restrict_to_qubit_subspace(const Matrix& u, const RegisterShape& shape);

/// True when the qubit-subspace block of u is closed: no amplitude connects
/// a qubit basis state to one with a level >= 2.
bool qubit_block_closed(const Matrix& u, const RegisterShape& shape, double tol = kEqualityTol);

}  // namespace qsl::core
