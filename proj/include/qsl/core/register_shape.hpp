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

#include <cstdint>
#include <span>
#include <vector>

#include "qsl/core/common.hpp"

namespace qsl::core {

/**
 * Mixed-radix register of information carriers (qubits, qutrits, ...).
 *
 * Convention used throughout: the leftmost carrier (index 0) is the most
 * significant one in ket notation |C_n,...,C_1,T> and in basis-index
 * arithmetic. All matrices and truth tables follow this ordering.
 */
class RegisterShape {
  public:
    explicit RegisterShape(std::vector<int> dims);

    const std::vector<int>& dims() const { return dims_; }
    int num_carriers() const { return static_cast<int>(dims_.size()); }
    int dim(int carrier) const { return dims_.at(static_cast<size_t>(carrier)); }
    long total_dimension() const { return total_; }

    /// Basis index of a multi-index (leftmost carrier most significant).
    long to_index(std::span<const int> levels) const;
    /// Multi-index of a basis index; inverse of to_index.
    std::vector<int> to_levels(long index) const;

    bool operator==(const RegisterShape& other) const { return dims_ == other.dims_; }

  private:
    std::vector<int> dims_;
    std::vector<long> strides_;
    long total_ = 1;
};

/**
 * Pure state over a RegisterShape. Normalized on construction unless the
 * caller explicitly flags a subnormalized state (used only inside heralding
 * computations).
 */
class StateVector {
  public:
    enum class Norm { Enforced, Unnormalized };

    StateVector(RegisterShape shape, Vector amplitudes, Norm norm = Norm::Enforced);

    /// Computational basis state |levels>.
    static StateVector basis(RegisterShape shape, std::span<const int> levels);

    const RegisterShape& shape() const { return shape_; }
    const Vector& amplitudes() const { return amplitudes_; }
    bool normalized_enforced() const { return norm_ == Norm::Enforced; }

  private:
    RegisterShape shape_;
    Vector amplitudes_;
    Norm norm_;
};

}  // namespace qsl::core
