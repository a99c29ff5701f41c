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

#include "qsl/optics/fock.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace qsl::optics {

ChannelTable::ChannelTable(std::vector<std::string> rails, int n_labels)
    : rails_(std::move(rails)), n_labels_(n_labels) {
    if (rails_.empty() || n_labels_ < 1) throw std::invalid_argument("ChannelTable: bad setup");
}

int ChannelTable::rail(const std::string& name) const {
    for (size_t i = 0; i < rails_.size(); ++i)
        if (rails_[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("ChannelTable: unknown rail '" + name + "'");
}

int ChannelTable::add_sink(const std::string& name) {
    sinks_.push_back(name);
    return physical_channels() + static_cast<int>(sinks_.size()) - 1;
}

FockState::FockState(int n_modes, int n_max) : n_modes_(n_modes), n_max_(n_max) {
    if (n_modes < 1 || n_max < 0) throw std::invalid_argument("FockState: bad setup");
}

FockState FockState::vacuum(int n_modes, int n_max) {
    FockState s(n_modes, n_max);
    s.amps_[std::string(static_cast<size_t>(n_modes), '\0')] = 1.0;
    return s;
}

void FockState::accumulate(const std::string& config, cdouble amp) {
    if (static_cast<int>(config.size()) != n_modes_)
        throw std::invalid_argument("FockState: config length mismatch");
    auto [it, inserted] = amps_.try_emplace(config, amp);
    if (!inserted) it->second += amp;
}

double FockState::norm2() const {
    double n = 0;
    for (const auto& [k, a] : amps_) n += std::norm(a);
    return n;
}

void FockState::scale(cdouble factor) {
    for (auto& [k, a] : amps_) a *= factor;
}

void FockState::prune(double tol) {
    for (auto it = amps_.begin(); it != amps_.end();) {
        if (std::abs(it->second) <= tol)
            it = amps_.erase(it);
        else
            ++it;
    }
}

int FockState::photons(const std::string& config) {
    int n = 0;
    for (char c : config) n += static_cast<unsigned char>(c);
    return n;
}

void FockState::create_photon(const std::vector<std::pair<int, cdouble>>& mode_amplitudes) {
    std::unordered_map<std::string, cdouble> out;
    out.reserve(amps_.size() * mode_amplitudes.size());
    for (const auto& [cfg, amp] : amps_) {
        if (photons(cfg) + 1 > n_max_)
            throw std::invalid_argument("FockState: photon-number cutoff overflow");
        for (const auto& [mode, coeff] : mode_amplitudes) {
            if (coeff == cdouble(0.0)) continue;
            std::string next = cfg;
            auto& occ = reinterpret_cast<unsigned char&>(next[static_cast<size_t>(mode)]);
            double factor = std::sqrt(static_cast<double>(occ) + 1.0);
            occ += 1;
            auto [it, inserted] = out.try_emplace(next, cdouble(0.0));
            it->second += amp * coeff * factor;
        }
    }
    amps_ = std::move(out);
}

FockState FockState::product(const FockState& a, const FockState& b) {
    if (a.n_modes_ != b.n_modes_) throw std::invalid_argument("FockState::product: mode mismatch");
    FockState out(a.n_modes_, std::max(a.n_max_, b.n_max_));
    for (const auto& [ka, va] : a.amps_) {
        for (const auto& [kb, vb] : b.amps_) {
            std::string k = ka;
            double comb = 1.0;  // sqrt of product of binomials from merging
            bool overflow = false;
            for (size_t i = 0; i < k.size(); ++i) {
                int na = static_cast<unsigned char>(ka[i]);
                int nb = static_cast<unsigned char>(kb[i]);
                if (na && nb) {
                    // (a^dag)^{na+nb} carries sqrt((na+nb)!) vs sqrt(na! nb!).
                    double num = 1.0;
                    for (int j = 1; j <= nb; ++j) num *= static_cast<double>(na + j) / j;
                    comb *= std::sqrt(num);
                }
                k[i] = static_cast<char>(na + nb);
            }
            if (FockState::photons(k) > out.n_max_) overflow = true;
            if (!overflow) out.accumulate(k, va * vb * comb);
        }
    }
    return out;
}

LinearLayer::LinearLayer(Matrix matrix, std::string label) : m(std::move(matrix)), name(std::move(label)) {
    if (m.rows() != m.cols()) throw std::invalid_argument("LinearLayer: square matrix required");
    Eigen::JacobiSVD<Matrix> svd(m);
    if (svd.singularValues().maxCoeff() > 1.0 + 1e-12)
        throw std::invalid_argument("LinearLayer: singular value exceeds 1 (gain is unphysical)");
}

FockState apply_linear_layer(const LinearLayer& layer, const ChannelTable& table,
                             const FockState& state) {
    if (layer.m.rows() != table.total_channels())
        throw std::invalid_argument("apply_linear_layer: layer does not cover the channel table");
    const int n_labels = table.n_labels();
    FockState out(state.n_modes(), state.n_max());

    // Column supports of the channel matrix, shared across labels.
    std::vector<std::vector<std::pair<int, cdouble>>> support(
        static_cast<size_t>(table.total_channels()));
    for (int c = 0; c < table.total_channels(); ++c)
        for (int j = 0; j < table.total_channels(); ++j)
            if (std::abs(layer.m(j, c)) > 0.0) support[static_cast<size_t>(c)].push_back({j, layer.m(j, c)});

    for (const auto& [cfg, amp] : state.amplitudes()) {
        double in_fact = 1.0;
        for (char ch : cfg)
            for (int j = 2; j <= static_cast<unsigned char>(ch); ++j) in_fact *= j;
        std::unordered_map<std::string, cdouble> terms;
        terms.emplace(std::string(cfg.size(), '\0'), amp / std::sqrt(in_fact));
        for (size_t m_idx = 0; m_idx < cfg.size(); ++m_idx) {
            int count = static_cast<unsigned char>(cfg[m_idx]);
            if (count == 0) continue;
            int channel = table.channel_of_mode(static_cast<int>(m_idx));
            int label = table.label_of_mode(static_cast<int>(m_idx));
            const auto& cols = support[static_cast<size_t>(channel)];
            for (int rep = 0; rep < count; ++rep) {
                std::unordered_map<std::string, cdouble> next;
                next.reserve(terms.size() * cols.size());
                for (const auto& [tk, tv] : terms) {
                    for (const auto& [out_channel, coeff] : cols) {
                        std::string nk = tk;
                        nk[static_cast<size_t>(table.mode(out_channel, label))] += 1;
                        auto [it, ins] = next.try_emplace(nk, cdouble(0.0));
                        it->second += tv * coeff;
                    }
                }
                terms = std::move(next);
            }
        }
        for (const auto& [tk, tv] : terms) {
            double out_fact = 1.0;
            for (char ch : tk)
                for (int j = 2; j <= static_cast<unsigned char>(ch); ++j) out_fact *= j;
            out.accumulate(tk, tv * std::sqrt(out_fact));
        }
    }
    out.prune();
    return out;
}

}  // namespace qsl::optics
