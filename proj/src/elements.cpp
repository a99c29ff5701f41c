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

#include "qsl/optics/elements.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsl::optics::elements {

namespace {
Matrix identity(const ChannelTable& t) {
    return Matrix::Identity(t.total_channels(), t.total_channels());
}
}  // namespace

LinearLayer hwp(const ChannelTable& t, int rail, double deg) {
    double a = 2.0 * deg * std::numbers::pi / 180.0;
    Matrix u2(2, 2);
    u2 << std::cos(a), std::sin(a), std::sin(a), -std::cos(a);
    return plate(t, rail, u2, "hwp(" + t.rail_name(rail) + "," + std::to_string(deg) + ")");
}

LinearLayer plate(const ChannelTable& t, int rail, const Matrix& u2, const std::string& name) {
    if (u2.rows() != 2 || u2.cols() != 2) throw std::invalid_argument("plate: 2x2 matrix required");
    Matrix m = identity(t);
    int h = t.channel(rail, Pol::H), v = t.channel(rail, Pol::V);
    m(h, h) = u2(0, 0);
    m(h, v) = u2(0, 1);
    m(v, h) = u2(1, 0);
    m(v, v) = u2(1, 1);
    return LinearLayer(std::move(m), name);
}

LinearLayer zrot(const ChannelTable& t, int rail, double theta) {
    Matrix u2 = Matrix::Identity(2, 2);
    u2(1, 1) = std::polar(1.0, theta);
    return plate(t, rail, u2, "zrot(" + t.rail_name(rail) + "," + std::to_string(theta) + ")");
}

LinearLayer ppbs(const ChannelTable& t, int rail_a, int rail_b, double tv) {
    if (tv < 0 || tv > 1) throw std::invalid_argument("ppbs: transmission amplitude out of range");
    double r = std::sqrt(std::max(0.0, 1.0 - tv * tv));
    Matrix m = identity(t);
    int av = t.channel(rail_a, Pol::V), bv = t.channel(rail_b, Pol::V);
    m(av, av) = tv;
    m(bv, av) = r;
    m(bv, bv) = tv;
    m(av, bv) = -r;
    return LinearLayer(std::move(m),
                       "ppbs(" + t.rail_name(rail_a) + "," + t.rail_name(rail_b) + ")");
}

LinearLayer beamsplitter(const ChannelTable& t, int rail_a, int rail_b, double amp_t) {
    double r = std::sqrt(std::max(0.0, 1.0 - amp_t * amp_t));
    Matrix m = identity(t);
    for (Pol p : {Pol::H, Pol::V}) {
        int a = t.channel(rail_a, p), b = t.channel(rail_b, p);
        m(a, a) = amp_t;
        m(b, a) = r;
        m(b, b) = amp_t;
        m(a, b) = -r;
    }
    return LinearLayer(std::move(m), "bs(" + t.rail_name(rail_a) + "," + t.rail_name(rail_b) + ")");
}

LinearLayer pbs_swap(const ChannelTable& t, int rail_a, int rail_b, Pol pol) {
    Matrix m = identity(t);
    int a = t.channel(rail_a, pol), b = t.channel(rail_b, pol);
    m(a, a) = 0;
    m(b, b) = 0;
    m(a, b) = 1;
    m(b, a) = 1;
    return LinearLayer(std::move(m),
                       "pbs(" + t.rail_name(rail_a) + "<->" + t.rail_name(rail_b) + ")");
}

LinearLayer pbs_merge(const ChannelTable& t, int src_v, int src_h, int out, int dump) {
    Matrix m = identity(t);
    int sv = t.channel(src_v, Pol::V), sh = t.channel(src_h, Pol::H);
    int shx = t.channel(src_v, Pol::H), svx = t.channel(src_h, Pol::V);
    int ov = t.channel(out, Pol::V), oh = t.channel(out, Pol::H);
    int dh = t.channel(dump, Pol::H), dv = t.channel(dump, Pol::V);
    // Kept components.
    m(sv, sv) = 0;
    m(ov, sv) = 1;
    m(sh, sh) = 0;
    m(oh, sh) = 1;
    // Complementary ports.
    m(shx, shx) = 0;
    m(dh, shx) = 1;
    m(svx, svx) = 0;
    m(dv, svx) = 1;
    // Keep the map unitary: route the former out/dump channels back.
    m(ov, ov) = 0;
    m(oh, oh) = 0;
    m(dh, dh) = 0;
    m(dv, dv) = 0;
    m(sv, ov) = 1;
    m(sh, oh) = 1;
    m(shx, dh) = 1;
    m(svx, dv) = 1;
    return LinearLayer(std::move(m), "merge(" + t.rail_name(src_v) + "," + t.rail_name(src_h) +
                                         "->" + t.rail_name(out) + ")");
}

LinearLayer attenuator(const ChannelTable& t, int channel, int sink_channel, double amp,
                       const std::string& name) {
    if (amp < 0 || amp > 1) throw std::invalid_argument("attenuator: amplitude out of [0,1]");
    Matrix m = identity(t);
    double leak = std::sqrt(std::max(0.0, 1.0 - amp * amp));
    m(channel, channel) = amp;
    m(sink_channel, channel) = leak;
    m(channel, sink_channel) = -leak;
    m(sink_channel, sink_channel) = amp;
    return LinearLayer(std::move(m), name);
}

}  // namespace qsl::optics::elements
