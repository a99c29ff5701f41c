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

#include "qsl/optics/fock.hpp"

namespace qsl::optics {

/**
 * Photon-pair source. Each pass emits collinear H-polarized pairs into its
 * two collection rails with amplitude structure vac + eps |1,1> + eps^2
 * |2,2> (normalized, truncated at `truncation` pairs). Photons from pass 0
 * carry the label state sqrt(xi)|0> + sqrt(1-xi)|1>; photons from later
 * passes carry label |0>, so same-pass photons are indistinguishable and
 * photons from different passes have squared overlap xi.
 */
struct SpdcPass {
    int rail_a;
    int rail_b;
    double epsilon;
};

struct SourceConfig {
    std::vector<SpdcPass> passes;
    double xi = 1.0;
    int truncation = 2;
    int n_max = 6;
};

/// Ideal source: one photon per input carrier (state set at run time) plus
/// fixed extra photons (e.g. a trigger).
struct IdealSource {
    std::vector<std::pair<int, Pol>> extra_photons;  // (rail, pol)
};

struct Detector {
    std::string name;
    int rail;
    int count = 1;
    bool threshold = true;  // true: at least `count`; false: exactly `count`
    bool analyzed = false;  // detector sits on a logical output rail
};

struct HeraldPattern {
    std::vector<Detector> detectors;
};

/// Dual encoding: logical 0 = H, logical 1 = V on the carrier's rail.
struct Encoding {
    std::vector<int> input_rails;   // most significant carrier first
    std::vector<int> output_rails;  // most significant carrier first
};

struct AttenuationSlot {
    std::string name;
    size_t layer_index;
    int channel;
    int sink_channel;
    double amplitude;
};

struct OpticalExperiment {
    ChannelTable table;
    std::vector<LinearLayer> layers;
    HeraldPattern herald;
    Encoding encoding;
    std::optional<SourceConfig> spdc;  // nullopt: ideal single photons
    IdealSource ideal;
    std::vector<AttenuationSlot> slots;
    std::string name;
    /// Input-amplitude rescaling applied instead of a removed loss element.
    std::vector<Vector> prebias;  // one 2-vector per input carrier, or empty

    int num_inputs() const { return static_cast<int>(encoding.input_rails.size()); }
    int num_outputs() const { return static_cast<int>(encoding.output_rails.size()); }
    void set_slot(const std::string& name, double amplitude);
    double slot_value(const std::string& name) const;
};

/// Source state before preparation plates and circuit layers.
FockState spdc_state(const SourceConfig& cfg, const ChannelTable& table);

/// Full propagation for a product input: one normalized 2-vector of
/// polarization amplitudes per input carrier.
FockState propagate(const OpticalExperiment& exp, const std::vector<Vector>& preps);

struct HeraldedMapResult {
    Matrix raw;                            // unnormalized heralded amplitudes
    Matrix map;                            // raw / largest column norm
    double success;                        // min over basis inputs of column norm^2
    std::vector<double> per_input_success;
};

/// Heralded logical map for an ideal (single-photon) source.
HeraldedMapResult heralded_map(const OpticalExperiment& exp);

/// Heralded output density matrix (unnormalized; trace = herald probability)
/// for a product input, tracing distinguishability labels and junk modes.
/// Only clean coincidences (exactly one photon per output rail) contribute.
std::pair<Matrix, double> output_density(const OpticalExperiment& exp,
                                         const std::vector<Vector>& preps);

/// Completely positive heralded superoperator via label tracing, returned as
/// the Choi matrix sum_{ij} E(|i><j|) (x) |i><j| convention C[(out),(in)].
Matrix heralded_superoperator(const OpticalExperiment& exp);

struct HomResult {
    double coincidence;
    double visibility;
};

/// Two-photon coincidence after a beamsplitter of intensity reflectivity R
/// with mode overlap xi: coincidence = xi (T-R)^2 + (1-xi)(T^2+R^2),
/// visibility = 2TR xi / (T^2 + R^2).
HomResult hom_coincidence(double reflectivity, double xi);

/// Same quantity from a full Fock simulation of the beamsplitter.
HomResult hom_coincidence_fock(double reflectivity, double xi);

// Fixed layouts. Solved attenuation values are committed constants; the
// balance solver reproduces them from scratch (see balance_attenuations).
OpticalExperiment ppbs_cz_layout();
OpticalExperiment cu_layout(double theta, bool prebias = false);
OpticalExperiment toffoli_layout();
/// Toffoli layout without the sign-to-flip conversion plates: the heralded
/// map is the diagonal three-qubit sign gate.
OpticalExperiment toffoli_sign_layout();

/// Noisy variants driven by an SPDC source.
OpticalExperiment cu_layout_spdc(double theta, double epsilon, double xi);
OpticalExperiment toffoli_layout_spdc(double epsilon, double xi);

struct BalanceResult {
    std::vector<double> amplitudes;  // per slot, in slot order
    double deviation;                // proportionality residual
    double success;
    bool converged;
};

/**
 * Coordinate-descent search over the experiment's attenuation slots in
 * [0,1], minimizing the deviation of the heralded map from proportionality
 * to target (ties broken toward higher success). Deterministic given seed.
 */
BalanceResult balance_attenuations(OpticalExperiment& exp, const Matrix& target,
                                   unsigned seed = 0, double tol = 1e-6);

}  // namespace qsl::optics
