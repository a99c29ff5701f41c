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

#include "qsl/core/embed.hpp"

#include <stdexcept>

namespace qsl::core {

namespace {

// Shared column walker: calls visit(row, col, amp) for every nonzero entry
// of the embedded unitary, column by column.
template <typename Visit>
void for_each_entry(const PlacedGate& g, const RegisterShape& shape, Visit&& visit) {
    validate_placement(g, shape);
    const long total = shape.total_dimension();
    for (long col = 0; col < total; ++col) {
        std::vector<int> levels = shape.to_levels(col);
        bool fires = true;
        for (const auto& ctl : g.controls) {
            if (levels[static_cast<size_t>(ctl.carrier)] != ctl.value) {
                fires = false;
                break;
            }
        }
        if (!fires) {
            visit(col, col, cdouble(1.0));
            continue;
        }
        if (g.is_level_swap()) {
            const auto& ls = g.level_swap();
            int& lv = levels[static_cast<size_t>(g.targets[0])];
            if (lv == ls.level_a)
                lv = ls.level_b;
            else if (lv == ls.level_b)
                lv = ls.level_a;
            visit(shape.to_index(levels), col, cdouble(1.0));
            continue;
        }
        bool in_qubit_subspace = true;
        for (int t : g.targets) {
            if (levels[static_cast<size_t>(t)] >= 2) {
                in_qubit_subspace = false;
                break;
            }
        }
        if (!in_qubit_subspace) {
            visit(col, col, cdouble(1.0));
            continue;
        }
        const auto& gm = g.matrix_gate();
        int sub_col = 0;
        for (int t : g.targets) sub_col = (sub_col << 1) | levels[static_cast<size_t>(t)];
        const long sub_dim = gm.matrix.rows();
        std::vector<int> out = levels;
        for (long sub_row = 0; sub_row < sub_dim; ++sub_row) {
            cdouble amp = gm.matrix(sub_row, sub_col);
            if (amp == cdouble(0.0)) continue;
            long bits = sub_row;
            for (int k = static_cast<int>(g.targets.size()) - 1; k >= 0; --k) {
                out[static_cast<size_t>(g.targets[static_cast<size_t>(k)])] =
                    static_cast<int>(bits & 1);
                bits >>= 1;
            }
            visit(shape.to_index(out), col, amp);
        }
    }
}

}  // namespace

Matrix embed_gate(const PlacedGate& g, const RegisterShape& shape) {
    const long total = shape.total_dimension();
    Matrix u = Matrix::Zero(total, total);
    for_each_entry(g, shape, [&](long row, long col, cdouble amp) { u(row, col) += amp; });
    return u;
}

StateVector apply(const PlacedGate& g, const StateVector& s) {
    const auto& shape = s.shape();
    Vector out = Vector::Zero(shape.total_dimension());
    const Vector& in = s.amplitudes();
    for_each_entry(g, shape, [&](long row, long col, cdouble amp) { out(row) += amp * in(col); });
    return StateVector(shape, std::move(out),
                       s.normalized_enforced() ? StateVector::Norm::Enforced
                                               : StateVector::Norm::Unnormalized);
}

StateVector apply(const Circuit& c, const StateVector& s) {
    if (!(c.shape == s.shape())) throw std::invalid_argument("apply: shape mismatch");
    StateVector cur = s;
    for (const auto& g : c.gates) cur = apply(g, cur);
    return cur;
}

Matrix unitary_of(const Circuit& c) {
    const long total = c.shape.total_dimension();
    Matrix u = Matrix::Identity(total, total);
    for (const auto& g : c.gates) u = embed_gate(g, c.shape) * u;
    return u;
}

namespace {

std::vector<long> qubit_subspace_indices(const RegisterShape& shape) {
    std::vector<long> idx;
    const long total = shape.total_dimension();
    for (long i = 0; i < total; ++i) {
        bool ok = true;
        for (int lv : shape.to_levels(i)) {
            if (lv >= 2) {
                ok = false;
                break;
            }
        }
        if (ok) idx.push_back(i);
    }
    return idx;
}

}  // namespace

Matrix restrict_to_qubit_subspace(const Matrix& u, const RegisterShape& shape) {
    if (u.rows() != shape.total_dimension())
        throw std::invalid_argument("restrict_to_qubit_subspace: dimension mismatch");
    std::vector<long> idx = qubit_subspace_indices(shape);
    Matrix r(idx.size(), idx.size());
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = 0; b < idx.size(); ++b) r(a, b) = u(idx[a], idx[b]);
    return r;
}

bool qubit_block_closed(const Matrix& u, const RegisterShape& shape, double tol) {
    std::vector<long> idx = qubit_subspace_indices(shape);
    std::vector<bool> in_sub(static_cast<size_t>(shape.total_dimension()), false);
    for (long i : idx) in_sub[static_cast<size_t>(i)] = true;
    for (long col : idx) {
        for (long row = 0; row < u.rows(); ++row) {
            if (!in_sub[static_cast<size_t>(row)] && std::abs(u(row, col)) > tol) return false;
        }
    }
    return true;
}

}  // namespace qsl::core
