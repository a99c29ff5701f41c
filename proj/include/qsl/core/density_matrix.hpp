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

#include "qsl/core/common.hpp"

namespace qsl::core {

/**
 * Density matrix with validated invariants: Hermitian within 1e-9,
 * eigenvalues >= -1e-9, unit trace within 1e-9.
 */
class DensityMatrix {
  public:
    explicit DensityMatrix(Matrix rho);

    static DensityMatrix pure(const Vector& psi);
    static DensityMatrix maximally_mixed(long dim);

    const Matrix& matrix() const { return rho_; }
    long dimension() const { return rho_.rows(); }

  private:
    Matrix rho_;
};

}  // namespace qsl::core
