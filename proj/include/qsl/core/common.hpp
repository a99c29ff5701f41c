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

#include <complex>

#include <Eigen/Dense>

namespace qsl {

using cdouble = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Default numerical tolerances. Dimensions stay small (<= ~10^3), so double
// precision leaves ample headroom against these.
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kEqualityTol = 1e-9;
inline constexpr double kAmplitudeTol = 1e-12;

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline bool is_unitary(const Matrix& u, double tol = kUnitaryTol) {
    if (u.rows() != u.cols()) return false;
    Matrix id = Matrix::Identity(u.rows(), u.cols());
    return max_abs_diff(u.adjoint() * u, id) <= tol;
}

}  // namespace qsl
