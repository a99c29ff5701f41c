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

#include <functional>

#include "qsl/core/density_matrix.hpp"

namespace qsl::tomo {

using core::DensityMatrix;
using qsl::Matrix;
using qsl::Vector;
using Eigen::VectorXd;

/// Row-stochastic table of output distributions per logical input.
struct TruthTable {
    Eigen::MatrixXd p;  // p(input, output)

    explicit TruthTable(Eigen::MatrixXd probs);
    long dimension() const { return p.rows(); }
};

/// Runs `runner` on every logical basis input; each call returns the output
/// distribution over the 2^qubit_count outcomes (normalized here).
TruthTable truth_table(const std::function<VectorXd(long input)>& runner, int qubit_count);

/// Average probability of the ideal output over all inputs,
/// Tr(M_exp M_ideal^T)/d under the row convention p(input, output).
double inquisition(const TruthTable& m_exp, const TruthTable& m_ideal);

/// 1/2 (1 + (P_ideal - P_flip)/(P_ideal + P_flip)).
double flipping_contrast(double p_ideal, double p_flip);

/// Uhlmann fidelity {Tr sqrt(sqrt(rho) sigma sqrt(rho))}^2.
double fidelity(const Matrix& rho, const Matrix& sigma);

/// d (1 - Tr rho^2) / (d - 1).
double linear_entropy(const Matrix& rho);

/// Squared concurrence via the spin-flipped matrix rho (Y(x)Y) rho* (Y(x)Y).
double tangle(const Matrix& rho);

/// Process fidelity Tr(chi_a chi_b) for trace-normalized process matrices.
double process_fidelity(const Matrix& chi_a, const Matrix& chi_b);

/// Pauli operator basis {I,X,Y,Z}^(x)k in row-major index order.
std::vector<Matrix> pauli_basis(int qubits);

/// Trace-normalized process matrix of a unitary in the Pauli basis.
Matrix chi_of_unitary(const Matrix& u);

}  // namespace qsl::tomo
