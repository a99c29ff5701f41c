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

#include "qsl/core/gates.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace qsl::core {

GateMatrix::GateMatrix(Matrix m, std::string lbl, std::vector<double> prm)
    : matrix(std::move(m)), label(std::move(lbl)), params(std::move(prm)) {
    long d = matrix.rows();
    if (d < 2 || matrix.cols() != d || (d & (d - 1)) != 0)
        throw std::invalid_argument("GateMatrix: matrix must be square with dimension 2^arity");
    arity = 0;
    for (long k = d; k > 1; k >>= 1) ++arity;
    if (!is_unitary(matrix, kUnitaryTol))
        throw std::invalid_argument("GateMatrix: matrix is not unitary");
}

LevelSwap::LevelSwap(int a, int b) : level_a(a), level_b(b) {
    if (a == b || a < 0 || b < 0) throw std::invalid_argument("LevelSwap: levels must differ and be >= 0");
}

std::string LevelSwap::label() const {
    return "LSWAP(" + std::to_string(level_a) + "," + std::to_string(level_b) + ")";
}

std::string PlacedGate::label() const {
    return is_level_swap() ? level_swap().label() : matrix_gate().label;
}

Circuit::Circuit(RegisterShape s, std::vector<PlacedGate> g) : shape(std::move(s)), gates(std::move(g)) {
    for (const auto& pg : gates) validate_placement(pg, shape);
}

Circuit& Circuit::add(PlacedGate g) {
    validate_placement(g, shape);
    gates.push_back(std::move(g));
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    if (!(other.shape == shape)) throw std::invalid_argument("Circuit::append: shape mismatch");
    for (const auto& g : other.gates) gates.push_back(g);
    return *this;
}

void validate_placement(const PlacedGate& g, const RegisterShape& shape) {
    std::set<int> seen;
    auto check_carrier = [&](int c) {
        if (c < 0 || c >= shape.num_carriers())
            throw std::invalid_argument("PlacedGate: carrier index out of range");
        if (!seen.insert(c).second)
            throw std::invalid_argument("PlacedGate: repeated carrier");
    };
    for (int t : g.targets) check_carrier(t);
    for (const auto& c : g.controls) {
        check_carrier(c.carrier);
        if (c.value != 0 && c.value != 1)
            throw std::invalid_argument("PlacedGate: control value must be 0 or 1");
    }
    if (g.is_level_swap()) {
        if (g.targets.size() != 1)
            throw std::invalid_argument("LevelSwap acts on exactly one carrier");
        const auto& ls = g.level_swap();
        int d = shape.dim(g.targets[0]);
        if (ls.level_a >= d || ls.level_b >= d)
            throw std::invalid_argument("LevelSwap: level exceeds carrier dimension");
    } else {
        const auto& gm = g.matrix_gate();
        if (static_cast<int>(g.targets.size()) != gm.arity)
            throw std::invalid_argument("PlacedGate: target count does not match gate arity");
    }
}

namespace gate {

GateMatrix x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return GateMatrix(m, "X");
}

GateMatrix y() {
    Matrix m(2, 2);
    m << 0, cdouble(0, -1), cdouble(0, 1), 0;
    return GateMatrix(m, "Y");
}

GateMatrix z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return GateMatrix(m, "Z");
}

GateMatrix h() {
    Matrix m(2, 2);
    const double s = 1.0 / std::numbers::sqrt2;
    m << s, s, s, -s;
    return GateMatrix(m, "H");
}

GateMatrix t() {
    Matrix m = Matrix::Identity(2, 2);
    m(1, 1) = std::polar(1.0, std::numbers::pi / 4);
    return GateMatrix(m, "T");
}

GateMatrix tdg() {
    Matrix m = Matrix::Identity(2, 2);
    m(1, 1) = std::polar(1.0, -std::numbers::pi / 4);
    return GateMatrix(m, "TDG");
}

GateMatrix z_theta(double theta) {
    Matrix m = Matrix::Identity(2, 2);
    m(1, 1) = std::polar(1.0, theta);
    return GateMatrix(m, "ZTHETA", {theta});
}

GateMatrix from_matrix2(const Matrix& u, const std::string& label) {
    if (u.rows() != 2 || u.cols() != 2)
        throw std::invalid_argument("from_matrix2: expected a 2x2 unitary");
    std::vector<double> params;
    params.reserve(8);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            params.push_back(u(r, c).real());
            params.push_back(u(r, c).imag());
        }
    GateMatrix g(u, label, std::move(params));
    return g;
}

PlacedGate place1(GateMatrix g, int target) { return PlacedGate{std::move(g), {target}, {}}; }

PlacedGate place_swap(int target, int level_a, int level_b) {
    return PlacedGate{LevelSwap(level_a, level_b), {target}, {}};
}

PlacedGate cx(int control, int target, int control_value) {
    return PlacedGate{x(), {target}, {{control, control_value}}};
}

PlacedGate cz(int control, int target, int control_value) {
    return PlacedGate{z(), {target}, {{control, control_value}}};
}

PlacedGate controlled(GateMatrix g, int control, int target, int control_value) {
    return PlacedGate{std::move(g), {target}, {{control, control_value}}};
}

}  // namespace gate

}  // namespace qsl::core
