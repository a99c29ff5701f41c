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

#include "qsl/optics/fock.hpp"

namespace qsl::optics::elements {

/// Half-wave plate at `deg` degrees on one rail:
/// [[cos 2a, sin 2a], [sin 2a, -cos 2a]] on (H, V).
LinearLayer hwp(const ChannelTable& t, int rail, double deg);

/// Arbitrary polarization transformation on one rail.
LinearLayer plate(const ChannelTable& t, int rail, const Matrix& u2, const std::string& name);

/// Phase e^{i theta} on the V component of one rail.
LinearLayer zrot(const ChannelTable& t, int rail, double theta);

/// Partially polarizing beamsplitter: H passes both rails untouched, the V
/// modes mix with amplitude transmission tv, reflection sqrt(1-tv^2):
/// a -> tv a + r b, b -> tv b - r a.
LinearLayer ppbs(const ChannelTable& t, int rail_a, int rail_b, double tv);

/// Non-polarizing beamsplitter on both polarizations (same convention).
LinearLayer beamsplitter(const ChannelTable& t, int rail_a, int rail_b, double amp_t);

/// Polarizing swap: exchanges the `pol` components of two rails.
LinearLayer pbs_swap(const ChannelTable& t, int rail_a, int rail_b, Pol pol);

/// Polarizing merge of (src_v: V, src_h: H) into `out`; the complementary
/// components land in `dump`.
LinearLayer pbs_merge(const ChannelTable& t, int src_v, int src_h, int out, int dump);

/// Attenuator on a single (rail, pol) channel: amplitude `amp` survives, the
/// rest couples to `sink_channel` (rotation block, so the layer is unitary).
LinearLayer attenuator(const ChannelTable& t, int channel, int sink_channel, double amp,
                       const std::string& name);

}  // namespace qsl::optics::elements
