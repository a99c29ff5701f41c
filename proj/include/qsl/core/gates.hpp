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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qsl/core/common.hpp"
#include "qsl/core/register_shape.hpp"

namespace qsl::core {

/**
 * A gate matrix over the logical qubit subspace of its targets: a 2^arity
 * square unitary. When placed on carriers of dimension > 2 it acts on levels
 * {0,1} and imparts the identity on any basis state with a targeted level
 * >= 2.
 */
struct GateMatrix {
    Matrix matrix;
    int arity = 1;
    std::string label;
    std::vector<double> params;  // e.g. the angle of Z_theta

    GateMatrix(Matrix m, std::string lbl, std::vector<double> prm = {});
};

/// Permutation of two levels (a,b) of a single carrier.
struct LevelSwap {
    int level_a;
    int level_b;

    LevelSwap(int a, int b);
    std::string label() const;
};

struct ControlSpec {
    int carrier;
    int value;  // 0 or 1; the gate fires when the control carrier equals it
};

/**
 * A gate placed on a register. `targets` are the carriers the matrix (or
 * level swap) acts on, most significant first. `controls` may condition the
 * gate on qubit values of other carriers; a control carrier in a level >= 2
 * leaves the gate inert.
 */
struct PlacedGate {
    std::variant<GateMatrix, LevelSwap> gate;
    std::vector<int> targets;
    std::vector<ControlSpec> controls;

    bool is_level_swap() const { return std::holds_alternative<LevelSwap>(gate); }
    const GateMatrix& matrix_gate() const { return std::get<GateMatrix>(gate); }
    const LevelSwap& level_swap() const { return std::get<LevelSwap>(gate); }
    /// Number of distinct carriers the gate touches (targets + controls).
    int carrier_count() const {
        return static_cast<int>(targets.size() + controls.size());
    }
    std::string label() const;
};

struct Circuit {
    RegisterShape shape;
    std::vector<PlacedGate> gates;

    explicit Circuit(RegisterShape s) : shape(std::move(s)) {}
    Circuit(RegisterShape s, std::vector<PlacedGate> g);

    Circuit& add(PlacedGate g);
    /// Appends another circuit's gates (shapes must match).
    Circuit& append(const Circuit& other);
};

void validate_placement(const PlacedGate& g, const RegisterShape& shape);

// Named one- and two-carrier gates used by the builders.
namespace gate {
GateMatrix x();
GateMatrix y();
GateMatrix z();
GateMatrix h();
GateMatrix t();
GateMatrix tdg();
GateMatrix z_theta(double theta);
GateMatrix from_matrix2(const Matrix& u, const std::string& label = "MAT2");

PlacedGate place1(GateMatrix g, int target);
PlacedGate place_swap(int target, int level_a, int level_b);
PlacedGate cx(int control, int target, int control_value = 1);
PlacedGate cz(int control, int target, int control_value = 1);
PlacedGate controlled(GateMatrix g, int control, int target, int control_value = 1);
}  // namespace gate

}  // namespace qsl::core
