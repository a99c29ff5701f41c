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

#include "qsl/build/shortcut.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsl::build {

using namespace core;

CostReport cost_report(const Circuit& c) {
    CostReport r;
    for (const auto& g : c.gates) {
        if (g.carrier_count() >= 2)
            ++r.two_qubit_gate_count;
        else
            ++r.single_carrier_gate_count;
    }
    r.max_carrier_dimension = 2;
    for (int d : c.shape.dims()) r.max_carrier_dimension = std::max(r.max_carrier_dimension, d);
    return r;
}

namespace {

void check_pattern(int n, const FirePattern& p) {
    if (static_cast<int>(p.size()) != n)
        throw std::invalid_argument("fire pattern length must equal the number of controls");
    for (int b : p)
        if (b != 0 && b != 1) throw std::invalid_argument("fire pattern bits must be 0 or 1");
}

// Shelf level opened by prefix layer i (1-based): S_1 parks level 0 at 2,
// later layers use a fresh level each.
int shelf_level(int i) { return i + 1; }

}  // namespace

Circuit build_ts() {
    // Same gate list as build_n_toffoli_sign(2, {0,1}); spelled out because
    // it is the primitive everything else is checked against.
    Circuit c(RegisterShape({2, 2, 3}));
    c.add(gate::place_swap(2, 0, 2));
    c.add(gate::cx(1, 2));
    c.add(gate::cz(0, 2));
    c.add(gate::cx(1, 2));
    c.add(gate::place_swap(2, 0, 2));
    return c;
}

Circuit build_cu_theta(double theta, int fire) {
    if (fire != 0 && fire != 1) throw std::invalid_argument("build_cu_theta: fire must be 0 or 1");
    Circuit c(RegisterShape({2, 3}));
    c.add(gate::place_swap(1, 0, 2));
    c.add(gate::cx(0, 1, 1 - fire));
    c.add(gate::place1(gate::z_theta(theta), 1));
    c.add(gate::cx(0, 1, 1 - fire));
    c.add(gate::place_swap(1, 0, 2));
    return c;
}

Circuit build_n_toffoli_sign(int n, const FirePattern& p) {
    if (n < 1) throw std::invalid_argument("build_n_toffoli_sign: n must be >= 1");
    check_pattern(n, p);
    std::vector<int> dims(static_cast<size_t>(n), 2);
    dims.push_back(n + 1);
    RegisterShape shape(dims);
    Circuit c(shape);
    const int target = n;
    auto carrier_of = [n](int i) { return n - i; };  // C_i lives at carrier n-i

    std::vector<PlacedGate> prefix;
    for (int i = 1; i <= n - 1; ++i) {
        prefix.push_back(gate::place_swap(target, 0, shelf_level(i)));
        prefix.push_back(gate::cx(carrier_of(i), target, 1 - p[static_cast<size_t>(i - 1)]));
    }
    for (const auto& g : prefix) c.add(g);
    c.add(gate::cz(carrier_of(n), target, p[static_cast<size_t>(n - 1)]));
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) c.add(*it);
    return c;
}

Circuit build_cn_z_theta(int n, double theta, const FirePattern& p, bool central_two_qubit) {
    if (n < 1) throw std::invalid_argument("build_cn_z_theta: n must be >= 1");
    check_pattern(n, p);
    if (central_two_qubit) {
        // (n+1)-level target, 2n-1 two-qubit gates, controlled-Z_theta center.
        std::vector<int> dims(static_cast<size_t>(n), 2);
        dims.push_back(n + 1);
        RegisterShape shape2(dims);
        Circuit c(shape2);
        const int target = n;
        auto carrier_of = [n](int i) { return n - i; };
        std::vector<PlacedGate> prefix;
        for (int i = 1; i <= n - 1; ++i) {
            prefix.push_back(gate::place_swap(target, 0, shelf_level(i)));
            prefix.push_back(gate::cx(carrier_of(i), target, 1 - p[static_cast<size_t>(i - 1)]));
        }
        for (const auto& g : prefix) c.add(g);
        c.add(gate::controlled(gate::z_theta(theta), carrier_of(n), target,
                               p[static_cast<size_t>(n - 1)]));
        for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) c.add(*it);
        return c;
    }
    std::vector<int> dims(static_cast<size_t>(n), 2);
    dims.push_back(n + 2);
    RegisterShape shape(dims);
    Circuit c(shape);
    const int target = n;
    auto carrier_of = [n](int i) { return n - i; };
    std::vector<PlacedGate> prefix;
    for (int i = 1; i <= n; ++i) {
        prefix.push_back(gate::place_swap(target, 0, shelf_level(i)));
        prefix.push_back(gate::cx(carrier_of(i), target, 1 - p[static_cast<size_t>(i - 1)]));
    }
    for (const auto& g : prefix) c.add(g);
    c.add(gate::place1(gate::z_theta(theta), target));
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) c.add(*it);
    return c;
}

SpectralDecomposition2x2 spectral_decompose_2x2(const Matrix& u) {
    if (u.rows() != 2 || u.cols() != 2 || !is_unitary(u, 1e-9))
        throw std::invalid_argument("spectral_decompose_2x2: 2x2 unitary required");

    auto wrap = [](double a) {
        while (a > std::numbers::pi) a -= 2 * std::numbers::pi;
        while (a <= -std::numbers::pi) a += 2 * std::numbers::pi;
        return a;
    };

    cdouble l1, l2;
    Matrix v(2, 2);
    if (std::abs(u(0, 1)) < 1e-12 && std::abs(u(1, 0)) < 1e-12) {
        l1 = u(0, 0);
        l2 = u(1, 1);
        v = Matrix::Identity(2, 2);
    } else {
        cdouble tr = u(0, 0) + u(1, 1);
        cdouble det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
        cdouble disc = std::sqrt(tr * tr - 4.0 * det);
        l1 = (tr + disc) / 2.0;
        l2 = (tr - disc) / 2.0;
        // Eigenvector for l1; the second column is its orthogonal complement
        // (exact for a normal matrix).
        Vector e1(2);
        if (std::abs(u(0, 1)) >= std::abs(u(1, 0)))
            e1 << u(0, 1), l1 - u(0, 0);
        else
            e1 << l1 - u(1, 1), u(1, 0);
        e1.normalize();
        v.col(0) = e1;
        v(0, 1) = -std::conj(e1(1));
        v(1, 1) = std::conj(e1(0));
        l2 = (v.col(1).adjoint() * u * v.col(1))(0, 0);
    }

    auto assemble = [&](cdouble a, cdouble b, const Matrix& vv) {
        SpectralDecomposition2x2 d;
        d.alpha = std::arg(a);
        d.theta = wrap(std::arg(b) - std::arg(a));
        d.v = vv;
        return d;
    };
    Matrix swapped(2, 2);
    swapped.col(0) = v.col(1);
    swapped.col(1) = v.col(0);
    SpectralDecomposition2x2 d1 = assemble(l1, l2, v);
    SpectralDecomposition2x2 d2 = assemble(l2, l1, swapped);
    SpectralDecomposition2x2 best =
        (std::abs(wrap(d2.alpha)) < std::abs(wrap(d1.alpha)) - 1e-12) ||
                (std::abs(std::abs(wrap(d2.alpha)) - std::abs(wrap(d1.alpha))) <= 1e-12 &&
                 d2.theta > d1.theta)
            ? d2
            : d1;

    Matrix z = Matrix::Identity(2, 2);
    z(1, 1) = std::polar(1.0, best.theta);
    Matrix rebuilt = std::polar(1.0, best.alpha) * best.v * z * best.v.adjoint();
    if (max_abs_diff(rebuilt, u) > 1e-9)
        throw std::runtime_error("spectral_decompose_2x2: reconstruction residual too large");
    return best;
}

std::pair<Circuit, double> build_cn_u(int n, const Matrix& u, const FirePattern& p) {
    SpectralDecomposition2x2 d = spectral_decompose_2x2(u);
    Circuit inner = build_cn_z_theta(n, d.theta, p);
    Circuit c(inner.shape);
    const int target = n;
    c.add(gate::place1(gate::from_matrix2(d.v.adjoint(), "VDAG"), target));
    c.append(inner);
    c.add(gate::place1(gate::from_matrix2(d.v, "V"), target));
    return {std::move(c), d.alpha};
}

Circuit add_controls(const Circuit& inner, int n, const FirePattern& q, int control_carrier) {
    if (n < 0) throw std::invalid_argument("add_controls: n must be >= 0");
    check_pattern(n, q);
    const auto& dims0 = inner.shape.dims();
    if (control_carrier < 0 || control_carrier >= inner.shape.num_carriers())
        throw std::invalid_argument("add_controls: control carrier out of range");
    for (const auto& g : inner.gates) {
        bool conditioned = false;
        for (const auto& ctl : g.controls) {
            if (ctl.carrier == control_carrier) {
                if (ctl.value != 1)
                    throw std::invalid_argument(
                        "add_controls: inner gates must condition on the control carrier at value 1");
                conditioned = true;
            }
        }
        for (int t : g.targets)
            if (t == control_carrier)
                throw std::invalid_argument("add_controls: inner gates may not target the control carrier");
        if (!conditioned)
            throw std::invalid_argument(
                "add_controls: every inner gate must be conditioned on the control carrier");
    }
    if (n == 0) return inner;

    const int d0 = dims0[static_cast<size_t>(control_carrier)];
    std::vector<int> dims(static_cast<size_t>(n), 2);
    for (size_t i = 0; i < dims0.size(); ++i) {
        int d = dims0[i];
        if (static_cast<int>(i) == control_carrier) d += n;
        dims.push_back(d);
    }
    Circuit c((RegisterShape(dims)));
    const int ctrl = control_carrier + n;  // old carriers shift right by n
    auto d_carrier = [n](int i) { return n - i; };  // D_i lives at carrier n-i

    std::vector<PlacedGate> prefix;
    for (int i = 1; i <= n; ++i) {
        prefix.push_back(gate::place_swap(ctrl, 0, d0 + i - 1));
        prefix.push_back(gate::cx(d_carrier(i), ctrl, 1 - q[static_cast<size_t>(i - 1)]));
    }
    for (const auto& g : prefix) c.add(g);
    for (const auto& g : inner.gates) {
        PlacedGate shifted = g;
        for (int& t : shifted.targets) t += n;
        for (auto& ctl : shifted.controls) ctl.carrier += n;
        c.add(std::move(shifted));
    }
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) c.add(*it);
    return c;
}

Circuit toffoli_from_ts(std::pair<int, int> flip_pattern) {
    auto [a, b] = flip_pattern;
    if ((a != 0 && a != 1) || (b != 0 && b != 1))
        throw std::invalid_argument("toffoli_from_ts: flip pattern bits must be 0 or 1");
    Circuit c(RegisterShape({2, 2, 3}));
    // The sign gate fires at (C_2, C_1) = (1, 0); X conjugation moves it to
    // the requested flip pattern and H on T turns the sign into a flip.
    std::vector<PlacedGate> outer;
    if (a != 1) outer.push_back(gate::place1(gate::x(), 0));
    if (b != 0) outer.push_back(gate::place1(gate::x(), 1));
    outer.push_back(gate::place1(gate::h(), 2));
    for (const auto& g : outer) c.add(g);
    c.append(build_ts());
    for (auto it = outer.rbegin(); it != outer.rend(); ++it) c.add(*it);
    return c;
}

Circuit textbook_toffoli_6cnot() {
    Circuit c(RegisterShape({2, 2, 2}));
    const int a = 0, b = 1, t = 2;
    c.add(gate::place1(gate::h(), t));
    c.add(gate::cx(b, t));
    c.add(gate::place1(gate::tdg(), t));
    c.add(gate::cx(a, t));
    c.add(gate::place1(gate::t(), t));
    c.add(gate::cx(b, t));
    c.add(gate::place1(gate::tdg(), t));
    c.add(gate::cx(a, t));
    c.add(gate::place1(gate::t(), b));
    c.add(gate::place1(gate::t(), t));
    c.add(gate::cx(a, b));
    c.add(gate::place1(gate::h(), t));
    c.add(gate::place1(gate::t(), a));
    c.add(gate::place1(gate::tdg(), b));
    c.add(gate::cx(a, b));
    return c;
}

Matrix ideal_multi_controlled(int n, const Matrix& gate, const FirePattern& p) {
    if (n < 0) throw std::invalid_argument("ideal_multi_controlled: n must be >= 0");
    check_pattern(n, p);
    if (gate.rows() != gate.cols() || gate.rows() < 1)
        throw std::invalid_argument("ideal_multi_controlled: square gate required");
    const long dt = gate.rows();
    long fire_block = 0;
    for (int i = 0; i < n; ++i) fire_block = (fire_block << 1) | p[static_cast<size_t>(n - 1 - i)];
    // p is ordered C_1..C_n while carriers run C_n..C_1 left to right.
    const long total = (1L << n) * dt;
    Matrix u = Matrix::Identity(total, total);
    u.block(fire_block * dt, fire_block * dt, dt, dt) = gate;
    return u;
}

CostReport qubit_only_cost(QubitOnlyKind kind, int n) {
    if (n < 2) throw std::invalid_argument("qubit_only_cost: n must be >= 2");
    CostReport r;
    r.two_qubit_gate_count = (kind == QubitOnlyKind::NToffoli) ? 12 * n - 11 : 12 * n - 10;
    r.single_carrier_gate_count = 0;
    r.max_carrier_dimension = 2;
    r.ancilla_count = n - 1;
    if (n == 5)
        r.footnote =
            "reference qubit-only decomposition at n=5: both require 50 two-qubit gates "
            "plus 4 ancilla qubits";
    return r;
}

}  // namespace qsl::build
