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

#include <cmath>
#include <stdexcept>

#include "qsl/optics/experiment.hpp"

namespace qsl::optics {

FockState spdc_state(const SourceConfig& cfg, const ChannelTable& table) {
    if (cfg.truncation < 1) throw std::invalid_argument("spdc_state: truncation must be >= 1");
    if (cfg.xi < 0 || cfg.xi > 1) throw std::invalid_argument("spdc_state: xi out of [0,1]");
    if (table.n_labels() < 2 && cfg.xi < 1.0)
        throw std::invalid_argument("spdc_state: xi < 1 needs a second label sector");

    FockState total = FockState::vacuum(table.total_modes(), cfg.n_max);
    for (size_t pi = 0; pi < cfg.passes.size(); ++pi) {
        const auto& pass = cfg.passes[pi];
        if (pass.epsilon < 0) throw std::invalid_argument("spdc_state: epsilon must be >= 0");
        // Pass 0 photons carry the rotated label state; later passes the
        // reference label. Same-pass photons therefore share a label state
        // and cross-pass pairs have squared overlap xi.
        Vector label = Vector::Zero(table.n_labels());
        if (pi == 0 && table.n_labels() > 1) {
            label(0) = std::sqrt(cfg.xi);
            label(1) = std::sqrt(1.0 - cfg.xi);
        } else {
            label(0) = 1.0;
        }
        std::vector<std::pair<int, cdouble>> op_a, op_b;
        for (int l = 0; l < table.n_labels(); ++l) {
            if (std::abs(label(l)) > 0) {
                op_a.push_back({table.mode(table.channel(pass.rail_a, Pol::H), l), label(l)});
                op_b.push_back({table.mode(table.channel(pass.rail_b, Pol::H), l), label(l)});
            }
        }

        FockState pass_state = FockState::vacuum(table.total_modes(), cfg.n_max);
        FockState term = FockState::vacuum(table.total_modes(), cfg.n_max);
        double k_factorial = 1.0;
        for (int k = 1; k <= cfg.truncation; ++k) {
            if (2 * k > cfg.n_max) break;
            term.create_photon(op_a);
            term.create_photon(op_b);
            k_factorial *= k;
            FockState scaled = term;
            scaled.scale(std::pow(pass.epsilon, k) / k_factorial);
            for (const auto& [c, a] : scaled.amplitudes()) pass_state.accumulate(c, a);
        }
        double n2 = pass_state.norm2();
        pass_state.scale(1.0 / std::sqrt(n2));
        total = FockState::product(total, pass_state);
    }
    double n2 = total.norm2();
    if (n2 > 0) total.scale(1.0 / std::sqrt(n2));
    return total;
}

}  // namespace qsl::optics
