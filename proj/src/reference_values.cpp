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

#include "qsl/reference_values.hpp"

namespace qsl::reference {

const std::vector<ValueWithError>& toffoli_contrasts() {
    static const std::vector<ValueWithError> v = {
        {"contrast_00", 0.99, 0.01},
        {"contrast_01", 0.95, 0.02},
        {"contrast_10", 0.80, 0.02},
        {"contrast_11", 0.73, 0.05},
    };
    return v;
}

ValueWithError toffoli_inquisition() { return {"inquisition", 0.81, 0.03}; }

ValueWithError toffoli_contrast_low_power() { return {"contrast_11_quarter_power", 0.83, 0.04}; }

const std::vector<std::vector<ValueWithError>>& bell_triples() {
    static const std::vector<std::vector<ValueWithError>> v = {
        {{"fidelity", 0.90, 0.04}, {"linear_entropy", 0.21, 0.08}, {"tangle", 0.68, 0.10}},
        {{"fidelity", 0.75, 0.06}, {"linear_entropy", 0.47, 0.10}, {"tangle", 0.04, 0.06}},
        {{"fidelity", 0.81, 0.02}, {"linear_entropy", 0.39, 0.05}, {"tangle", 0.53, 0.07}},
        {{"fidelity", 0.80, 0.03}, {"linear_entropy", 0.40, 0.05}, {"tangle", 0.01, 0.01}},
    };
    return v;
}

const std::vector<ValueWithError>& cu_process_fidelities() {
    static const std::vector<ValueWithError> v = {
        {"F_p_CT", 0.982, 0.003},
        {"F_p_CJ", 0.977, 0.004},
        {"F_p_CL", 0.940, 0.006},
        {"F_p_CZ", 0.956, 0.003},
    };
    return v;
}

const std::vector<ValueWithError>& cu_linear_entropies() {
    static const std::vector<ValueWithError> v = {
        {"S_L_CT", 0.036, 0.004},
        {"S_L_CJ", 0.047, 0.004},
        {"S_L_CL", 0.091, 0.005},
        {"S_L_CZ", 0.086, 0.006},
    };
    return v;
}

const std::vector<ValueWithError>& interference_visibilities() {
    static const std::vector<ValueWithError> v = {
        {"V_r_dependent", 1.00, 0.01},
        {"V_r_independent", 0.92, 0.04},
    };
    return v;
}

}  // namespace qsl::reference
