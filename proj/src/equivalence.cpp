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

#include "qsl/core/equivalence.hpp"

#include <cmath>
#include <stdexcept>

namespace qsl::core {

bool equal_up_to_global_phase(const Matrix& u, const Matrix& v, double tol) {
    if (u.rows() != v.rows() || u.cols() != v.cols())
        throw std::invalid_argument("equal_up_to_global_phase: dimension mismatch");
    long ri = 0, ci = 0;
    double best = -1.0;
    for (long r = 0; r < u.rows(); ++r) {
        for (long c = 0; c < u.cols(); ++c) {
            double m = std::min(std::abs(u(r, c)), std::abs(v(r, c)));
            if (m > best) {
                best = m;
                ri = r;
                ci = c;
            }
        }
    }
    if (best <= tol) return max_abs_diff(u, v) <= tol;
    cdouble ratio = u(ri, ci) / v(ri, ci);
    cdouble c = ratio / std::abs(ratio);
    return max_abs_diff(u, c * v) <= tol;
}

std::optional<LocalPhaseSolution> local_phase_equivalence(const Matrix& u, const Matrix& v,
                                                          const RegisterShape& shape,
                                                          double tol) {
    const long total = shape.total_dimension();
    if (u.rows() != total || v.rows() != total || u.cols() != total || v.cols() != total)
        throw std::invalid_argument("local_phase_equivalence: dimension mismatch");
    for (int d : shape.dims())
        if (d != 2) throw std::invalid_argument("local_phase_equivalence: all-qubit shape required");
    auto check_diag = [&](const Matrix& m) {
        for (long r = 0; r < total; ++r) {
            for (long c = 0; c < total; ++c) {
                if (r == c) {
                    if (std::abs(std::abs(m(r, c)) - 1.0) > tol)
                        throw std::invalid_argument("local_phase_equivalence: not a diagonal unitary");
                } else if (std::abs(m(r, c)) > tol) {
                    throw std::invalid_argument("local_phase_equivalence: not a diagonal unitary");
                }
            }
        }
    };
    check_diag(u);
    check_diag(v);

    const int n = shape.num_carriers();
    // Basis 0 pins the global phase; single-excitation indices pin each
    // carrier angle. All remaining entries are consistency checks.
    auto arg_at = [&](const Matrix& m, long i) { return std::arg(m(i, i)); };
    double g = arg_at(u, 0) - arg_at(v, 0);
    std::vector<double> phi(static_cast<size_t>(n), 0.0);
    for (int c = 0; c < n; ++c) {
        std::vector<int> lv(static_cast<size_t>(n), 0);
        lv[static_cast<size_t>(c)] = 1;
        long i = shape.to_index(lv);
        // phi_c + arg(u_i) = g + arg(v_i)   (mod 2*pi)
        phi[static_cast<size_t>(c)] = g + arg_at(v, i) - arg_at(u, i);
    }
    // Verify every diagonal entry as complex numbers (phase-wrap safe).
    for (long i = 0; i < total; ++i) {
        std::vector<int> lv = shape.to_levels(i);
        double acc = 0.0;
        for (int c = 0; c < n; ++c)
            if (lv[static_cast<size_t>(c)] == 1) acc += phi[static_cast<size_t>(c)];
        cdouble lhs = std::polar(1.0, acc) * u(i, i);
        cdouble rhs = std::polar(1.0, g) * v(i, i);
        if (std::abs(lhs - rhs) > tol) return std::nullopt;
    }
    return LocalPhaseSolution{std::move(phi), g};
}

}  // namespace qsl::core
