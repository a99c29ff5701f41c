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

#include "qsl/core/gates.hpp"

namespace qsl::core {

/**
 * Line-oriented circuit format, one gate per line:
 *
 *   # qsl circuit v1
 *   dims=[2,2,3]
 *   LSWAP targets=[2] params=[0,2]
 *   X targets=[2] controls=[(1,1)]
 *   ZTHETA targets=[2] params=[0.785398163397448279]
 *   MAT2 targets=[0] params=[re00,im00,re01,im01,re10,im10,re11,im11]
 *
 * Gate names: X, Y, Z, H, T, TDG, ZTHETA (params=[theta]), LSWAP
 * (params=[a,b]) and MAT2 (row-major re/im pairs) for anything else.
 * serialize/parse round-trip exactly at double precision.
 */
std::string serialize_circuit(const Circuit& c);
Circuit parse_circuit(const std::string& text);

}  // namespace qsl::core
