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

namespace qsl::reference {

/// Published measurement anchors from the original experiment. These appear
/// only in clearly labeled reference columns of reports; they are not
/// reproducible without the lab's calibration and are never test oracles.
struct ValueWithError {
    std::string label;
    double value;
    double error;
};

const std::vector<ValueWithError>& toffoli_contrasts();        // per control pattern
ValueWithError toffoli_inquisition();
ValueWithError toffoli_contrast_low_power();                   // (1,1) at quarter power
const std::vector<std::vector<ValueWithError>>& bell_triples();  // {F, S_L, tangle} x 4 cases
const std::vector<ValueWithError>& cu_process_fidelities();    // CT, CJ, CL, CZ
const std::vector<ValueWithError>& cu_linear_entropies();
const std::vector<ValueWithError>& interference_visibilities();  // dependent, independent (relative)

}  // namespace qsl::reference
