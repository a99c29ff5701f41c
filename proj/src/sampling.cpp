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

#include "qsl/optics/sampling.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qsl/optics/elements.hpp"

namespace qsl::optics {

std::vector<Vector> basis_preps(int carriers, long input) {
    std::vector<Vector> preps;
    for (int c = carriers - 1; c >= 0; --c) {
        Vector s = Vector::Zero(2);
        s(((input >> c) & 1)) = 1.0;
        preps.push_back(s);
    }
    return preps;
}

std::vector<Vector> proj_preps(const std::vector<tomo::Proj6>& states) {
    std::vector<Vector> preps;
    preps.reserve(states.size());
    for (auto p : states) preps.push_back(tomo::proj6_state(p));
    return preps;
}

namespace {

int rail_port_count(const ChannelTable& t, const std::string& cfg, int rail, Pol pol) {
    int n = 0;
    int ch = t.channel(rail, pol);
    for (int l = 0; l < t.n_labels(); ++l)
        n += static_cast<unsigned char>(cfg[static_cast<size_t>(t.mode(ch, l))]);
    return n;
}

bool extra_ok(const OpticalExperiment& exp, const std::string& cfg) {
    for (const auto& d : exp.herald.detectors) {
        if (d.analyzed) continue;
        int n = rail_port_count(exp.table, cfg, d.rail, Pol::H) +
                rail_port_count(exp.table, cfg, d.rail, Pol::V);
        if (d.threshold ? (n < d.count) : (n != d.count)) return false;
    }
    return true;
}

}  // namespace

Eigen::VectorXd outcome_probabilities(const OpticalExperiment& exp,
                                      const std::vector<Vector>& preps,
                                      const tomo::MeasurementSetting& setting) {
    const int k = exp.num_outputs();
    if (setting.qubits() != k)
        throw std::invalid_argument("outcome_probabilities: setting does not match output count");
    FockState st = propagate(exp, preps);
    // Analyzer plates: the selected projector state rotates onto the V port.
    for (int q = 0; q < k; ++q) {
        Vector s = tomo::proj6_state(setting.projectors[static_cast<size_t>(q)]);
        Matrix u2(2, 2);
        u2(0, 0) = -std::conj(s(1));
        u2(0, 1) = std::conj(s(0));
        u2(1, 0) = std::conj(s(0));
        u2(1, 1) = std::conj(s(1));
        st = apply_linear_layer(
            elements::plate(exp.table, exp.encoding.output_rails[static_cast<size_t>(q)], u2,
                            "analyzer"),
            exp.table, st);
    }
    Eigen::VectorXd probs = Eigen::VectorXd::Zero(1L << k);
    for (const auto& [cfg, amp] : st.amplitudes()) {
        if (!extra_ok(exp, cfg)) continue;
        double p = std::norm(amp);
        if (p == 0) continue;
        // Threshold counting: a configuration contributes to every outcome
        // pattern whose selected ports all hold at least one photon.
        std::vector<int> h_count(static_cast<size_t>(k)), v_count(static_cast<size_t>(k));
        for (int q = 0; q < k; ++q) {
            int rail = exp.encoding.output_rails[static_cast<size_t>(q)];
            h_count[static_cast<size_t>(q)] = rail_port_count(exp.table, cfg, rail, Pol::H);
            v_count[static_cast<size_t>(q)] = rail_port_count(exp.table, cfg, rail, Pol::V);
        }
        for (long pat = 0; pat < (1L << k); ++pat) {
            bool ok = true;
            for (int q = 0; q < k && ok; ++q) {
                // Bit 0 in the pattern = "+" port = V after the analyzer.
                bool plus = ((pat >> (k - 1 - q)) & 1) == 0;
                ok = (plus ? v_count[static_cast<size_t>(q)] : h_count[static_cast<size_t>(q)]) >= 1;
            }
            if (ok) probs(pat) += p;
        }
    }
    return probs;
}

Eigen::VectorXd logical_outcome_probabilities(const OpticalExperiment& exp, long input) {
    const int k = exp.num_outputs();
    tomo::MeasurementSetting comp;
    comp.projectors.assign(static_cast<size_t>(k), tomo::Proj6::V);
    // With V projectors, "+" means V = logical 1, so the outcome pattern bit
    // equals 1 - logical; flip to logical ordering.
    Eigen::VectorXd raw = outcome_probabilities(exp, basis_preps(k, input), comp);
    Eigen::VectorXd probs = Eigen::VectorXd::Zero(raw.size());
    const long mask = raw.size() - 1;
    for (long pat = 0; pat < raw.size(); ++pat) probs(pat ^ mask) = raw(pat);
    return probs;
}

namespace {

std::vector<tomo::CountRecord> draw_counts(
    const std::vector<tomo::MeasurementSetting>& settings,
    const std::function<Eigen::VectorXd(const tomo::MeasurementSetting&)>& prob_fn, long shots,
    uint64_t seed, bool poisson, bool normalize_per_setting = false) {
    if (shots <= 0) throw std::invalid_argument("sample_counts: shots must be > 0");
    std::mt19937_64 rng(seed);
    std::vector<tomo::CountRecord> records;
    for (const auto& s : settings) {
        Eigen::VectorXd p = prob_fn(s);
        if (normalize_per_setting) {
            double total = p.sum();
            if (total > 0) p /= total;
        }
        tomo::CountRecord r;
        r.setting = s;
        r.shots = shots;
        for (long pat = 0; pat < p.size(); ++pat) {
            double mean = static_cast<double>(shots) * std::max(0.0, p(pat));
            if (poisson && mean > 0) {
                std::poisson_distribution<long> dist(mean);
                r.counts.push_back(dist(rng));
            } else {
                r.counts.push_back(std::llround(mean));
            }
        }
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace

std::vector<tomo::CountRecord> sample_counts(const OpticalExperiment& exp,
                                             const std::vector<Vector>& preps,
                                             const std::vector<tomo::MeasurementSetting>& settings,
                                             long shots, uint64_t seed, bool poisson,
                                             bool normalize_per_setting) {
    return draw_counts(
        settings,
        [&](const tomo::MeasurementSetting& s) { return outcome_probabilities(exp, preps, s); },
        shots, seed, poisson, normalize_per_setting);
}

std::vector<tomo::CountRecord> sample_counts_from_state(
    const Matrix& rho, const std::vector<tomo::MeasurementSetting>& settings, long shots,
    uint64_t seed, bool poisson) {
    return draw_counts(
        settings,
        [&](const tomo::MeasurementSetting& s) {
            Eigen::VectorXd p(s.outcomes());
            for (long pat = 0; pat < s.outcomes(); ++pat)
                p(pat) = (s.outcome_projector(pat) * rho).trace().real();
            return p;
        },
        shots, seed, poisson);
}

}  // namespace qsl::optics
