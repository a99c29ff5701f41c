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

#include "qsl/tomo/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qsl::tomo {

TruthTable::TruthTable(Eigen::MatrixXd probs) : p(std::move(probs)) {
    if (p.rows() != p.cols() || p.rows() < 2)
        throw std::invalid_argument("TruthTable: square table required");
    for (long r = 0; r < p.rows(); ++r) {
        double s = p.row(r).sum();
        if (s <= 0) throw std::invalid_argument("TruthTable: empty row");
        if (p.row(r).minCoeff() < -1e-12)
            throw std::invalid_argument("TruthTable: negative probability");
        if (std::abs(s - 1.0) > 1e-6) p.row(r) /= s;
    }
}

TruthTable truth_table(const std::function<VectorXd(long)>& runner, int qubit_count) {
    const long d = 1L << qubit_count;
    Eigen::MatrixXd p(d, d);
    for (long in = 0; in < d; ++in) {
        VectorXd row = runner(in);
        if (row.size() != d) throw std::invalid_argument("truth_table: runner returned wrong size");
        double s = row.sum();
        if (s <= 0) throw std::runtime_error("truth_table: runner failure on an input");
        p.row(in) = row.transpose() / s;
    }
    return TruthTable(p);
}

double inquisition(const TruthTable& m_exp, const TruthTable& m_ideal) {
    if (m_exp.dimension() != m_ideal.dimension())
        throw std::invalid_argument("inquisition: dimension mismatch");
    double acc = (m_exp.p.array() * m_ideal.p.array()).sum();
    return acc / static_cast<double>(m_exp.dimension());
}

double flipping_contrast(double p_ideal, double p_flip) {
    if (p_ideal < 0 || p_flip < 0) throw std::invalid_argument("flipping_contrast: negative input");
    double s = p_ideal + p_flip;
    if (s <= 0) throw std::invalid_argument("flipping_contrast: both probabilities zero");
    return 0.5 * (1.0 + (p_ideal - p_flip) / s);
}

namespace {

Matrix psd_sqrt(const Matrix& m, double tol = 1e-9) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    if (es.eigenvalues().minCoeff() < -tol)
        throw std::invalid_argument("matrix is not positive semidefinite");
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
    return es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double fidelity(const Matrix& rho, const Matrix& sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols() || rho.rows() != rho.cols())
        throw std::invalid_argument("fidelity: dimension mismatch");
    Matrix sr = psd_sqrt(rho);
    Matrix inner = psd_sqrt(sr * sigma * sr);
    double f = inner.trace().real();
    return f * f;
}

double linear_entropy(const Matrix& rho) {
    const double d = static_cast<double>(rho.rows());
    if (d < 2) throw std::invalid_argument("linear_entropy: dimension >= 2 required");
    double purity = (rho * rho).trace().real();
    return d * (1.0 - purity) / (d - 1.0);
}

double tangle(const Matrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw std::invalid_argument("tangle: two-qubit density matrix required");
    Matrix yy = Matrix::Zero(4, 4);
    yy(0, 3) = -1;
    yy(1, 2) = 1;
    yy(2, 1) = 1;
    yy(3, 0) = -1;  // Y(x)Y
    Matrix rho_tilde = yy * rho.conjugate() * yy;
    Matrix sr = psd_sqrt(rho);
    Matrix herm = sr * rho_tilde * sr;
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    std::sort(ev.data(), ev.data() + ev.size(), std::greater<double>());
    double c = ev(0) - ev(1) - ev(2) - ev(3);
    c = std::max(0.0, c);
    return c * c;
}

double process_fidelity(const Matrix& chi_a, const Matrix& chi_b) {
    if (chi_a.rows() != chi_b.rows()) throw std::invalid_argument("process_fidelity: size mismatch");
    return (chi_a * chi_b).trace().real();
}

std::vector<Matrix> pauli_basis(int qubits) {
    std::vector<Matrix> single(4, Matrix::Identity(2, 2));
    single[1] << 0, 1, 1, 0;
    single[2] << 0, cdouble(0, -1), cdouble(0, 1), 0;
    single[3] << 1, 0, 0, -1;
    std::vector<Matrix> out{Matrix::Identity(1, 1)};
    for (int q = 0; q < qubits; ++q) {
        std::vector<Matrix> next;
        next.reserve(out.size() * 4);
        for (const auto& a : out) {
            for (const auto& s : single) {
                Matrix m(a.rows() * 2, a.cols() * 2);
                for (long r = 0; r < a.rows(); ++r)
                    for (long c = 0; c < a.cols(); ++c) m.block(r * 2, c * 2, 2, 2) = a(r, c) * s;
                next.push_back(std::move(m));
            }
        }
        out = std::move(next);
    }
    return out;
}

Matrix chi_of_unitary(const Matrix& u) {
    const long d = u.rows();
    int qubits = 0;
    for (long k = d; k > 1; k >>= 1) ++qubits;
    auto basis = pauli_basis(qubits);
    Vector coeffs(static_cast<long>(basis.size()));
    for (size_t i = 0; i < basis.size(); ++i)
        coeffs(static_cast<long>(i)) = (basis[i].adjoint() * u).trace() / static_cast<double>(d);
    Matrix chi = coeffs * coeffs.adjoint();
    return chi / chi.trace().real();
}

}  // namespace qsl::tomo
