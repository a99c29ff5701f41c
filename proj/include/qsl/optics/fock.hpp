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
#include <unordered_map>
#include <vector>

#include "qsl/core/common.hpp"

namespace qsl::optics {

using qsl::Matrix;
using qsl::Vector;
using qsl::cdouble;

enum class Pol : int { H = 0, V = 1 };

/**
 * Channel bookkeeping for an experiment: physical channels are (rail,
 * polarization) pairs; sink channels absorb attenuated amplitude so that
 * photon loss is modeled exactly (lost photons are summed over, not
 * projected out, when heralding).
 *
 * A Fock mode is a (channel, distinguishability label) pair; linear layers
 * act on channels, identically across labels.
 */
class ChannelTable {
  public:
    ChannelTable(std::vector<std::string> rails, int n_labels);

    int rail_count() const { return static_cast<int>(rails_.size()); }
    int n_labels() const { return n_labels_; }
    int rail(const std::string& name) const;
    const std::string& rail_name(int rail) const { return rails_.at(static_cast<size_t>(rail)); }

    int channel(int rail, Pol p) const { return rail * 2 + static_cast<int>(p); }
    int physical_channels() const { return rail_count() * 2; }
    int add_sink(const std::string& name);
    int total_channels() const { return physical_channels() + static_cast<int>(sinks_.size()); }
    bool is_sink(int channel) const { return channel >= physical_channels(); }

    int mode(int channel, int label) const { return channel * n_labels_ + label; }
    int total_modes() const { return total_channels() * n_labels_; }
    int channel_of_mode(int mode) const { return mode / n_labels_; }
    int label_of_mode(int mode) const { return mode % n_labels_; }

  private:
    std::vector<std::string> rails_;
    std::vector<std::string> sinks_;
    int n_labels_;
};

/**
 * Superposition over multi-mode occupation configurations. Keys are byte
 * strings (photon count per mode); amplitudes refer to the orthonormal Fock
 * basis. Subnormalized states appear during heralding and loss.
 */
class FockState {
  public:
    FockState(int n_modes, int n_max);

    static FockState vacuum(int n_modes, int n_max);

    int n_modes() const { return n_modes_; }
    int n_max() const { return n_max_; }
    const std::unordered_map<std::string, cdouble>& amplitudes() const { return amps_; }

    void accumulate(const std::string& config, cdouble amp);
    double norm2() const;
    void scale(cdouble factor);
    void prune(double tol = 1e-15);
    /// Total photon number of a configuration.
    static int photons(const std::string& config);

    /// Multiplies by the creation operator sum_i coeffs[i] a^dag_{modes[i]}.
    void create_photon(const std::vector<std::pair<int, cdouble>>& mode_amplitudes);

    /// Tensor product of two states on the same mode set (occupations add).
    static FockState product(const FockState& a, const FockState& b);

  private:
    int n_modes_;
    int n_max_;
    std::unordered_map<std::string, cdouble> amps_;
};

/**
 * Mode transformation acting on creation operators: a^dag_c -> sum_j
 * M(j,c) a^dag_j, applied per distinguishability label. May be subunitary
 * (loss); singular values are checked against 1.
 */
struct LinearLayer {
    Matrix m;  // total_channels x total_channels
    std::string name;

    LinearLayer(Matrix matrix, std::string label);
};

FockState apply_linear_layer(const LinearLayer& layer, const ChannelTable& table,
                             const FockState& state);

}  // namespace qsl::optics
