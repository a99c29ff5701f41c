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

#include <string>
#include <vector>

#include "qsl/core/common.hpp"

namespace qsl::tomo {

using qsl::Matrix;
using qsl::Vector;

/// Six-state polarization analysis basis.
enum class Proj6 : int { H = 0, V, D, A, R, L };

char proj6_char(Proj6 p);
Proj6 proj6_from_char(char c);
/// Normalized single-qubit state the projector selects.
Vector proj6_state(Proj6 p);

/// One analysis setting: a Proj6 projector per qubit. Outcomes enumerate the
/// +/- ports of every analyzer, most significant qubit first.
struct MeasurementSetting {
    std::vector<Proj6> projectors;

    std::string label() const;
    int qubits() const { return static_cast<int>(projectors.size()); }
    int outcomes() const { return 1 << projectors.size(); }
    /// Rank-1 projector of outcome `pattern` (bit 0 selects the orthogonal
    /// port of the least significant qubit).
    Matrix outcome_projector(long pattern) const;
};

/// All 36 two-qubit settings {H,V,D,A,R,L} x {H,V,D,A,R,L}.
std::vector<MeasurementSetting> all_two_qubit_settings();

struct CountRecord {
    MeasurementSetting setting;
    long shots = 0;
    std::vector<long> counts;  // per outcome pattern
};

/// CSV schema v1: header line "# qsl counts v1", then
/// setting_id,projector_spec,shots,counts — one row per outcome, where
/// projector_spec is e.g. "DR:+-" (basis then port pattern).
std::string counts_to_csv(const std::vector<CountRecord>& records);
std::vector<CountRecord> counts_from_csv(const std::string& text);

}  // namespace qsl::tomo
