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

#include "qsl/optics/experiment.hpp"

namespace qsl::optics {

/**
 * Experiment description format v1: key-value header (rails, labels, sinks,
 * source, encoding), one `detector` line per herald detector, one `layer`
 * line per element with its sparse channel matrix, and one `slot` line per
 * adjustable attenuator. Round-trips exactly at double precision.
 */
std::string serialize_experiment(const OpticalExperiment& exp);
OpticalExperiment parse_experiment(const std::string& text);

}  // namespace qsl::optics
