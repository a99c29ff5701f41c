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

#include "qsl/optics/experiment.hpp"

#include <cmath>
#include <stdexcept>

#include "qsl/optics/elements.hpp"

namespace qsl::optics {

void OpticalExperiment::set_slot(const std::string& slot_name, double amplitude) {
    for (auto& s : slots) {
        if (s.name == slot_name) {
            s.amplitude = amplitude;
            layers[s.layer_index] =
                elements::attenuator(table, s.channel, s.sink_channel, amplitude, "att:" + s.name);
            return;
        }
    }
    throw std::invalid_argument("set_slot: unknown slot '" + slot_name + "'");
}

double OpticalExperiment::slot_value(const std::string& slot_name) const {
    for (const auto& s : slots)
        if (s.name == slot_name) return s.amplitude;
    throw std::invalid_argument("slot_value: unknown slot '" + slot_name + "'");
}

namespace {

std::vector<std::pair<int, cdouble>> label_modes(const ChannelTable& t, int channel,
                                                 const Vector& label_state) {
    std::vector<std::pair<int, cdouble>> out;
    for (int l = 0; l < t.n_labels(); ++l) {
        if (l < label_state.size() && std::abs(label_state(l)) > 0)
            out.push_back({t.mode(channel, l), label_state(l)});
    }
    return out;
}

Vector label0(int n_labels) {
    Vector v = Vector::Zero(n_labels);
    v(0) = 1.0;
    return v;
}

}  // namespace

FockState propagate(const OpticalExperiment& exp, const std::vector<Vector>& preps) {
    if (static_cast<int>(preps.size()) != exp.num_inputs())
        throw std::invalid_argument("propagate: one preparation state per input carrier required");
    std::vector<Vector> states = preps;
    for (auto& s : states) {
        if (s.size() != 2 || std::abs(s.squaredNorm() - 1.0) > 1e-9)
            throw std::invalid_argument("propagate: preparations must be normalized 2-vectors");
    }
    if (!exp.prebias.empty()) {
        for (size_t i = 0; i < states.size(); ++i) {
            Vector b = exp.prebias[i].cwiseProduct(states[i]);
            double n = b.norm();
            if (n < 1e-12) throw std::invalid_argument("propagate: pre-bias annihilates the input");
            states[i] = b / n;
        }
    }

    FockState state = FockState::vacuum(exp.table.total_modes(),
                                        exp.spdc ? exp.spdc->n_max : 16);
    if (exp.spdc) {
        state = spdc_state(*exp.spdc, exp.table);
        // Photons are born H; a preparation plate on each input rail rotates
        // them into the requested state.
        for (size_t i = 0; i < states.size(); ++i) {
            Matrix u2(2, 2);
            u2(0, 0) = states[i](0);
            u2(1, 0) = states[i](1);
            u2(0, 1) = -std::conj(states[i](1));
            u2(1, 1) = std::conj(states[i](0));
            auto plate = elements::plate(exp.table, exp.encoding.input_rails[i], u2, "prep");
            state = apply_linear_layer(plate, exp.table, state);
        }
    } else {
        Vector l0 = label0(exp.table.n_labels());
        for (size_t i = 0; i < states.size(); ++i) {
            int rail = exp.encoding.input_rails[i];
            std::vector<std::pair<int, cdouble>> modes;
            for (Pol p : {Pol::H, Pol::V}) {
                cdouble a = states[i](static_cast<int>(p));
                if (std::abs(a) > 0) modes.push_back({exp.table.mode(exp.table.channel(rail, p), 0), a});
            }
            state.create_photon(modes);
        }
        for (const auto& [rail, pol] : exp.ideal.extra_photons) {
            state.create_photon({{exp.table.mode(exp.table.channel(rail, pol), 0), 1.0}});
        }
    }
    for (const auto& layer : exp.layers) state = apply_linear_layer(layer, exp.table, state);
    return state;
}

namespace {

struct ConfigView {
    const ChannelTable& t;
    const std::string& cfg;

    int channel_count(int channel) const {
        int n = 0;
        for (int l = 0; l < t.n_labels(); ++l)
            n += static_cast<unsigned char>(cfg[static_cast<size_t>(t.mode(channel, l))]);
        return n;
    }
    int rail_count(int rail) const {
        return channel_count(t.channel(rail, Pol::H)) + channel_count(t.channel(rail, Pol::V));
    }
};

bool extra_detectors_ok(const OpticalExperiment& exp, const ConfigView& v) {
    for (const auto& d : exp.herald.detectors) {
        if (d.analyzed) continue;
        int n = v.rail_count(d.rail);
        if (d.threshold ? (n < d.count) : (n != d.count)) return false;
    }
    return true;
}

// Clean coincidence: exactly one photon per output rail. Returns the logical
// pattern and per-output (pol channel, label), or nullopt.
struct CleanDecode {
    long pattern;
    std::vector<int> modes;  // occupied mode per output carrier
};

std::optional<CleanDecode> decode_clean(const OpticalExperiment& exp, const ConfigView& v) {
    CleanDecode d{0, {}};
    for (int rail : exp.encoding.output_rails) {
        if (v.rail_count(rail) != 1) return std::nullopt;
        int bit = -1, mode = -1;
        for (Pol p : {Pol::H, Pol::V}) {
            int ch = exp.table.channel(rail, p);
            for (int l = 0; l < exp.table.n_labels(); ++l) {
                int m = exp.table.mode(ch, l);
                if (v.cfg[static_cast<size_t>(m)]) {
                    bit = static_cast<int>(p);
                    mode = m;
                }
            }
        }
        d.pattern = (d.pattern << 1) | bit;
        d.modes.push_back(mode);
    }
    return d;
}

// True when every channel outside the output rails and non-analyzed
// detector rails is empty (strict single-photon accounting).
bool rest_is_empty(const OpticalExperiment& exp, const ConfigView& v) {
    std::vector<bool> allowed(static_cast<size_t>(exp.table.total_channels()), false);
    for (int rail : exp.encoding.output_rails)
        for (Pol p : {Pol::H, Pol::V}) allowed[static_cast<size_t>(exp.table.channel(rail, p))] = true;
    for (const auto& det : exp.herald.detectors)
        if (!det.analyzed)
            for (Pol p : {Pol::H, Pol::V})
                allowed[static_cast<size_t>(exp.table.channel(det.rail, p))] = true;
    for (int ch = 0; ch < exp.table.total_channels(); ++ch) {
        if (!allowed[static_cast<size_t>(ch)] && v.channel_count(ch) != 0) return false;
    }
    return true;
}

}  // namespace

HeraldedMapResult heralded_map(const OpticalExperiment& exp) {
    if (exp.spdc)
        throw std::invalid_argument(
            "heralded_map: amplitude map is defined for the ideal source; use "
            "heralded_superoperator for noisy sources");
    const int k = exp.num_outputs();
    const long d = 1L << k;
    if (exp.num_inputs() != k)
        throw std::invalid_argument("heralded_map: input/output carrier count mismatch");
    HeraldedMapResult res;
    res.raw = Matrix::Zero(d, d);
    for (long in = 0; in < d; ++in) {
        std::vector<Vector> preps;
        for (int c = k - 1; c >= 0; --c) {
            Vector s = Vector::Zero(2);
            s(((in >> c) & 1)) = 1.0;
            preps.push_back(s);
        }
        FockState st = propagate(exp, preps);
        for (const auto& [cfg, amp] : st.amplitudes()) {
            ConfigView v{exp.table, cfg};
            if (!extra_detectors_ok(exp, v)) continue;
            if (!rest_is_empty(exp, v)) continue;
            auto dec = decode_clean(exp, v);
            if (!dec) continue;
            res.raw(dec->pattern, in) += amp;
        }
    }
    res.per_input_success.resize(static_cast<size_t>(d));
    double max_col = 0, min_col = 1e300;
    for (long in = 0; in < d; ++in) {
        double n2 = res.raw.col(in).squaredNorm();
        res.per_input_success[static_cast<size_t>(in)] = n2;
        max_col = std::max(max_col, n2);
        min_col = std::min(min_col, n2);
    }
    res.success = min_col;
    res.map = max_col > 0 ? Matrix(res.raw / std::sqrt(max_col)) : res.raw;
    return res;
}

namespace {

// Environment grouping for label/junk tracing: the key is the configuration
// with the output photons removed, plus the label of each output photon.
std::unordered_map<std::string, Vector> grouped_output_vectors(const OpticalExperiment& exp,
                                                               const FockState& st) {
    const long d = 1L << exp.num_outputs();
    std::unordered_map<std::string, Vector> groups;
    for (const auto& [cfg, amp] : st.amplitudes()) {
        ConfigView v{exp.table, cfg};
        if (!extra_detectors_ok(exp, v)) continue;
        auto dec = decode_clean(exp, v);
        if (!dec) continue;
        std::string key = cfg;
        std::string labels;
        for (int m : dec->modes) {
            key[static_cast<size_t>(m)] -= 1;
            labels.push_back(static_cast<char>(exp.table.label_of_mode(m)));
        }
        key += labels;
        auto [it, inserted] = groups.try_emplace(key, Vector::Zero(d));
        it->second(dec->pattern) += amp;
    }
    return groups;
}

}  // namespace

std::pair<Matrix, double> output_density(const OpticalExperiment& exp,
                                         const std::vector<Vector>& preps) {
    const long d = 1L << exp.num_outputs();
    FockState st = propagate(exp, preps);
    Matrix rho = Matrix::Zero(d, d);
    for (const auto& [key, vec] : grouped_output_vectors(exp, st)) rho += vec * vec.adjoint();
    return {rho, rho.trace().real()};
}

Matrix heralded_superoperator(const OpticalExperiment& exp) {
    const int k = exp.num_outputs();
    const long d = 1L << k;
    std::vector<std::unordered_map<std::string, Vector>> per_basis;
    per_basis.reserve(static_cast<size_t>(d));
    for (long in = 0; in < d; ++in) {
        std::vector<Vector> preps;
        for (int c = k - 1; c >= 0; --c) {
            Vector s = Vector::Zero(2);
            s(((in >> c) & 1)) = 1.0;
            preps.push_back(s);
        }
        per_basis.push_back(grouped_output_vectors(exp, propagate(exp, preps)));
    }
    Matrix choi = Matrix::Zero(d * d, d * d);
    for (long i = 0; i < d; ++i) {
        for (long j = 0; j < d; ++j) {
            Matrix block = Matrix::Zero(d, d);
            for (const auto& [key, vi] : per_basis[static_cast<size_t>(i)]) {
                auto it = per_basis[static_cast<size_t>(j)].find(key);
                if (it != per_basis[static_cast<size_t>(j)].end()) block += vi * it->second.adjoint();
            }
            for (long a = 0; a < d; ++a)
                for (long b = 0; b < d; ++b) choi(a * d + i, b * d + j) = block(a, b);
        }
    }
    return choi;
}

HomResult hom_coincidence(double reflectivity, double xi) {
    if (reflectivity < 0 || reflectivity > 1 || xi < 0 || xi > 1)
        throw std::invalid_argument("hom_coincidence: arguments out of range");
    double R = reflectivity, T = 1.0 - R;
    double classical = T * T + R * R;
    HomResult res;
    res.coincidence = xi * (T - R) * (T - R) + (1 - xi) * classical;
    res.visibility = classical > 0 ? xi * 2 * T * R / classical : 0.0;
    return res;
}

HomResult hom_coincidence_fock(double reflectivity, double xi) {
    ChannelTable table({"a", "b"}, 2);
    FockState st = FockState::vacuum(table.total_modes(), 2);
    st.create_photon({{table.mode(table.channel(0, Pol::H), 0), 1.0}});
    st.create_photon({{table.mode(table.channel(1, Pol::H), 0), std::sqrt(xi)},
                      {table.mode(table.channel(1, Pol::H), 1), std::sqrt(1.0 - xi)}});
    double amp_t = std::sqrt(1.0 - reflectivity);
    st = apply_linear_layer(elements::beamsplitter(table, 0, 1, amp_t), table, st);
    double coincidence = 0;
    for (const auto& [cfg, amp] : st.amplitudes()) {
        ConfigView v{table, cfg};
        if (v.rail_count(0) == 1 && v.rail_count(1) == 1) coincidence += std::norm(amp);
    }
    double R = reflectivity, T = 1.0 - R;
    double classical = T * T + R * R;
    HomResult res;
    res.coincidence = coincidence;
    res.visibility = classical > 0 ? (classical - coincidence) / classical : 0.0;
    return res;
}

}  // namespace qsl::optics
