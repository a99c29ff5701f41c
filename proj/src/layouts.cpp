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
#include <numbers>

#include "qsl/optics/elements.hpp"
#include "qsl/optics/experiment.hpp"

namespace qsl::optics {

namespace {

constexpr double kInvSqrt3 = 0.57735026918962573;  // 1/sqrt(3)
constexpr double kInvSqrt6 = 0.40824829046386302;  // 1/sqrt(6)
constexpr double kInvTwoSqrt2 = 0.35355339059327373;  // 1/(2 sqrt(2))

void add_att_slot(OpticalExperiment& exp, const std::string& name, int rail, Pol pol,
                  double amp) {
    int channel = exp.table.channel(rail, pol);
    int sink = exp.table.add_sink(name);
    // Existing layers must be widened to the new channel count.
    for (auto& layer : exp.layers) {
        Matrix m = Matrix::Identity(exp.table.total_channels(), exp.table.total_channels());
        m.topLeftCorner(layer.m.rows(), layer.m.cols()) = layer.m;
        layer.m = std::move(m);
    }
    exp.layers.push_back(elements::attenuator(exp.table, channel, sink, amp, "att:" + name));
    exp.slots.push_back({name, exp.layers.size() - 1, channel, sink, amp});
}

}  // namespace

OpticalExperiment ppbs_cz_layout() {
    // Central PPBS with T_V = 1/3 between the control and target rails; the
    // two-photon V.V amplitude t^2 - r^2 = -1/3 supplies the pi phase and
    // the H attenuators at 1/sqrt(3) balance the single-photon amplitudes.
    ChannelTable table({"c", "t"}, 2);
    OpticalExperiment exp{table, {}, {}, {}, std::nullopt, {}, {}, "cz"};
    int c = table.rail("c"), t = table.rail("t");
    exp.layers.push_back(elements::ppbs(exp.table, c, t, kInvSqrt3));
    add_att_slot(exp, "att_c_H", c, Pol::H, kInvSqrt3);
    add_att_slot(exp, "att_t_H", t, Pol::H, kInvSqrt3);
    exp.herald.detectors = {{"D1", c, 1, true, true}, {"D2", t, 1, true, true}};
    exp.encoding.input_rails = {c, t};
    exp.encoding.output_rails = {c, t};
    return exp;
}

OpticalExperiment cu_layout(double theta, bool prebias) {
    // Target expansion: a polarizing element parks the H (logical 0)
    // component in the shelf rail b, which bypasses the PPBS section. The
    // CNOT-equivalent is the PPBS CZ between Hadamard plates; the Z_theta
    // plate then phases only the branch that kept V in the top rail, so the
    // phase lands on (C1, T) = (0, 1). The 67.5 deg plate routes both top-
    // rail polarizations onto the merged V output with equal weight 1/sqrt 2.
    ChannelTable table({"c1", "t", "b", "o", "x"}, 2);
    OpticalExperiment exp{table, {}, {}, {}, std::nullopt, {}, {}, "cu"};
    int c1 = table.rail("c1"), t = table.rail("t"), b = table.rail("b");
    int o = table.rail("o"), x = table.rail("x");
    exp.layers.push_back(elements::pbs_swap(exp.table, t, b, Pol::H));
    exp.layers.push_back(elements::hwp(exp.table, t, 22.5));
    exp.layers.push_back(elements::ppbs(exp.table, c1, t, kInvSqrt3));
    add_att_slot(exp, "att_c1_H", c1, Pol::H, kInvSqrt3);
    add_att_slot(exp, "att_t_H", t, Pol::H, kInvSqrt3);
    exp.layers.push_back(elements::hwp(exp.table, t, 22.5));
    exp.layers.push_back(elements::zrot(exp.table, t, theta));
    exp.layers.push_back(elements::hwp(exp.table, t, 67.5));
    add_att_slot(exp, "L1_b_H", b, Pol::H, kInvSqrt6);
    exp.layers.push_back(elements::pbs_merge(exp.table, t, b, o, x));
    exp.herald.detectors = {{"D1", o, 1, true, true}, {"D2", c1, 1, true, true}};
    exp.encoding.input_rails = {c1, t};
    exp.encoding.output_rails = {c1, o};
    if (prebias) {
        // Count-rate mode: drop the control-rail loss and prepare the C1
        // input with its H amplitude scaled by 1/sqrt(3) instead.
        exp.set_slot("att_c1_H", 1.0);
        Vector bias_c1(2), bias_t(2);
        bias_c1 << kInvSqrt3, 1.0;
        bias_t << 1.0, 1.0;
        exp.prebias = {bias_c1, bias_t};
        exp.name = "cu-prebias";
    }
    return exp;
}

namespace {

OpticalExperiment toffoli_core(bool convert_to_flip) {
    // Plate angles are the solved balance: a 15 deg plate before PPBS1 and a
    // 22.5 deg plate between the PPBSs route the control-0 branch fully into
    // V and the control-1 branch fully into H at PPBS2 (both with norm
    // 1/sqrt(6)); the recombination plate at 15 deg (75 deg for the bare
    // sign gate) weights them 1/2 : sqrt(3)/2 so that all eight logical
    // amplitudes reach 1/(6 sqrt 2), i.e. success probability 1/72, with
    // loss only on (c1,H), (c2,H) at 1/sqrt(3) and the shelf rail at
    // 1/(2 sqrt 2).
    ChannelTable table({"c2", "c1", "t", "b", "trig", "o", "x"}, 2);
    OpticalExperiment exp{table, {}, {}, {}, std::nullopt, {}, {},
                          convert_to_flip ? "toffoli" : "toffoli-sign"};
    int c2 = table.rail("c2"), c1 = table.rail("c1"), t = table.rail("t");
    int b = table.rail("b"), trig = table.rail("trig");
    int o = table.rail("o"), x = table.rail("x");
    if (convert_to_flip) exp.layers.push_back(elements::hwp(exp.table, t, 22.5));
    exp.layers.push_back(elements::pbs_swap(exp.table, t, b, Pol::H));
    exp.layers.push_back(elements::hwp(exp.table, t, 15.0));
    exp.layers.push_back(elements::ppbs(exp.table, c1, t, kInvSqrt3));
    add_att_slot(exp, "L2_c1_H", c1, Pol::H, kInvSqrt3);
    exp.layers.push_back(elements::hwp(exp.table, t, 22.5));
    exp.layers.push_back(elements::ppbs(exp.table, c2, t, kInvSqrt3));
    add_att_slot(exp, "L3_c2_H", c2, Pol::H, kInvSqrt3);
    exp.layers.push_back(elements::hwp(exp.table, t, convert_to_flip ? 15.0 : 75.0));
    add_att_slot(exp, "L1_b_H", b, Pol::H, kInvTwoSqrt2);
    exp.layers.push_back(elements::pbs_merge(exp.table, t, b, o, x));
    if (convert_to_flip) exp.layers.push_back(elements::hwp(exp.table, o, 22.5));
    exp.herald.detectors = {{"D1", o, 1, true, true},
                            {"D2", c1, 1, true, true},
                            {"D3", c2, 1, true, true},
                            {"D4", trig, 1, true, false}};
    exp.encoding.input_rails = {c2, c1, t};
    exp.encoding.output_rails = {c2, c1, o};
    exp.ideal.extra_photons = {{trig, Pol::H}};
    return exp;
}

}  // namespace

OpticalExperiment toffoli_layout() { return toffoli_core(true); }

OpticalExperiment toffoli_sign_layout() { return toffoli_core(false); }

OpticalExperiment cu_layout_spdc(double theta, double epsilon, double xi) {
    OpticalExperiment exp = cu_layout(theta, false);
    SourceConfig src;
    src.passes = {{exp.table.rail("c1"), exp.table.rail("t"), epsilon}};
    src.xi = xi;
    src.truncation = 2;
    src.n_max = 4;
    exp.spdc = src;
    return exp;
}

OpticalExperiment toffoli_layout_spdc(double epsilon, double xi) {
    OpticalExperiment exp = toffoli_layout();
    SourceConfig src;
    src.passes = {{exp.table.rail("c1"), exp.table.rail("t"), epsilon},
                  {exp.table.rail("c2"), exp.table.rail("trig"), epsilon}};
    src.xi = xi;
    src.truncation = 2;
    src.n_max = 6;
    exp.spdc = src;
    return exp;
}

}  // namespace qsl::optics
